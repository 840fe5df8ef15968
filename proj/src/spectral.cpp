#include "oamkit/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace oamkit::spectral {

namespace {

// FFTW's planner is not thread-safe; plan creation is serialized and plans are
// cached per grid shape. fftw_execute_dft on fresh buffers is safe. Plans are
// built out-of-place with FFTW_UNALIGNED so they accept any caller buffers,
// and FFTW_ESTIMATE keeps planning deterministic.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int ny, int nx, int sign) {
        std::scoped_lock lock(mu_);
        auto key = std::tuple{ny, nx, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> a(static_cast<std::size_t>(nx) * ny);
        std::vector<cplx> b(a.size());
        fftw_plan p = fftw_plan_dft_2d(ny, nx, reinterpret_cast<fftw_complex*>(a.data()),
                                       reinterpret_cast<fftw_complex*>(b.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(const GridSpec& grid, const cplx* in, cplx* out, int sign) {
    fftw_plan p = PlanCache::instance().get(grid.ny, grid.nx, sign);
    if (in == out) {
        std::vector<cplx> tmp(in, in + grid.size());
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(tmp.data()),
                         reinterpret_cast<fftw_complex*>(out));
    } else {
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                         reinterpret_cast<fftw_complex*>(out));
    }
}

}  // namespace

void fft2(const GridSpec& grid, const cplx* in, cplx* out) {
    execute(grid, in, out, FFTW_FORWARD);
}

void ifft2(const GridSpec& grid, const cplx* in, cplx* out) {
    execute(grid, in, out, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) out[k] *= inv;
}

std::vector<double> wavenumbers(int n, double half_extent, bool zero_nyquist) {
    std::vector<double> k(n);
    const double dk = std::numbers::pi / half_extent;  // 2*pi/(2L)
    for (int m = 0; m < n; ++m) {
        const int folded = (m < n / 2) ? m : m - n;
        k[m] = dk * folded;
    }
    if (zero_nyquist) k[n / 2] = 0.0;
    return k;
}

}  // namespace oamkit::spectral
