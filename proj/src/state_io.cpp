#include "oamkit/state_io.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace oamkit {

namespace {

constexpr char kMagic[8] = {'O', 'A', 'M', 'W', 'F', '0', '1', '\n'};

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return v;
}

double get_f64(const char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return std::bit_cast<double>(v);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    // temp + rename keeps partially written files from being observed
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw StateIoError("cannot open for writing: " + path.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw StateIoError("write failed: " + path.string());
    }
    std::filesystem::rename(tmp, path);
}

GridState parse_json_state(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw StateIoError(std::string("malformed JSON state: ") + e.what());
    }
    try {
        GridSpec g{j.at("nx").get<int>(), j.at("ny").get<int>(), j.at("half_extent").get<double>()};
        const double hbar = j.at("hbar").get<double>();
        const auto& arr = j.at("amplitudes");
        if (!arr.is_array() || arr.size() != 2 * g.size())
            throw StateIoError("JSON state: amplitudes must hold 2*nx*ny numbers");
        std::vector<cplx> amps(g.size());
        for (std::size_t k = 0; k < amps.size(); ++k)
            amps[k] = cplx{arr[2 * k].get<double>(), arr[2 * k + 1].get<double>()};
        return GridState::from_amplitudes(g, std::move(amps), hbar);
    } catch (const nlohmann::json::exception& e) {
        throw StateIoError(std::string("malformed JSON state: ") + e.what());
    } catch (const GridError& e) {
        throw StateIoError(std::string("invalid state file: ") + e.what());
    }
}

}  // namespace

void save_state(const std::filesystem::path& path, const GridState& state) {
    const GridSpec& g = state.grid();
    if (path.extension() == ".json") {
        nlohmann::ordered_json j;
        j["format"] = "oamkit-state-1";
        j["nx"] = g.nx;
        j["ny"] = g.ny;
        j["half_extent"] = g.half_extent;
        j["hbar"] = state.hbar();
        auto arr = nlohmann::ordered_json::array();
        for (const cplx& a : state.amplitudes()) {
            arr.push_back(a.real());
            arr.push_back(a.imag());
        }
        j["amplitudes"] = std::move(arr);
        write_file(path, j.dump());
        return;
    }
    std::string buf;
    buf.reserve(32 + 16 * g.size());
    buf.append(kMagic, sizeof(kMagic));
    put_u32(buf, static_cast<std::uint32_t>(g.nx));
    put_u32(buf, static_cast<std::uint32_t>(g.ny));
    put_f64(buf, g.half_extent);
    put_f64(buf, state.hbar());
    for (const cplx& a : state.amplitudes()) {
        put_f64(buf, a.real());
        put_f64(buf, a.imag());
    }
    write_file(path, buf);
}

GridState load_state(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StateIoError("cannot open state file: " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.empty()) throw StateIoError("empty state file: " + path.string());
    if (bytes[0] == '{') return parse_json_state(bytes);

    if (bytes.size() < 32 || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
        throw StateIoError("not an oamkit state file: " + path.string());
    const std::uint32_t nx = get_u32(bytes.data() + 8);
    const std::uint32_t ny = get_u32(bytes.data() + 12);
    const double half_extent = get_f64(bytes.data() + 16);
    const double hbar = get_f64(bytes.data() + 24);
    if (nx > 1 << 16 || ny > 1 << 16) throw StateIoError("state header out of range");
    const std::size_t need = 32 + 16ull * nx * ny;
    if (bytes.size() != need) throw StateIoError("truncated state payload");
    GridSpec g{static_cast<int>(nx), static_cast<int>(ny), half_extent};
    std::vector<cplx> amps(g.size());
    const char* p = bytes.data() + 32;
    for (std::size_t k = 0; k < amps.size(); ++k, p += 16)
        amps[k] = cplx{get_f64(p), get_f64(p + 8)};
    try {
        return GridState::from_amplitudes(g, std::move(amps), hbar);
    } catch (const GridError& e) {
        throw StateIoError(std::string("invalid state file: ") + e.what());
    }
}

}  // namespace oamkit
