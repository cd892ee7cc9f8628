#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdepth/depth/configuration.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/selection/deep_point.hpp"

namespace sdepth::tverberg {

using depth::ColoredConfiguration;
using geom::Point;

// r / (1 - (1 - p_d)^(1/(d+1))), p_d = 1/(d+1)!. Grows like r (d+1)! (d+1).
double asymptotic_T(std::uint64_t r, std::size_t d);

// (d+1)(r-1)(d+1)! + 1: the class size from which a point of depth >= p_d is guaranteed to
// survive r greedy extractions. InputError on overflow.
std::uint64_t greedy_class_size(std::uint64_t r, std::size_t d);

// parts[k][i] indexes class i.
struct TverbergCertificate {
    Point witness;
    std::vector<std::vector<std::size_t>> parts;
};

struct CertificateCheck {
    bool ok = false;
    std::string reason;
};

// Independent check: r parts, one in-range point per class each, no point reused, and every
// closed part contains the witness.
CertificateCheck verify_certificate(const ColoredConfiguration& cfg, const TverbergCertificate& cert,
                                    std::uint64_t r);

enum class ExtractMode {
    Guaranteed, // class sizes must reach greedy_class_size(r, d)
    BestEffort,
};

struct ExtractOptions {
    ExtractMode mode = ExtractMode::Guaranteed;
    selection::SearchOptions search{selection::Strategy::Arrangement2d};
    bool default_search = true; // pick the strategy from the dimension
};

struct ExtractionResult {
    TverbergCertificate certificate;
    selection::DeepPointResult deep;
    // Whether the witness depth reached p_d, so the r parts were guaranteed in advance.
    bool depth_meets_bound = false;
    // Parts the counting argument guarantees for the witness's actual depth.
    std::uint64_t guaranteed_parts = 0;
};

// Rounds of greedy extraction guaranteed for a point in `containing` rainbow simplices: every
// round removes one point per class, which kills at most sum_i prod_{j != i} n_j of them.
std::uint64_t guaranteed_rounds(std::uint64_t containing, std::vector<std::size_t> sizes);

class ExtractionExhausted : public Error {
public:
    ExtractionExhausted(TverbergCertificate partial, std::uint64_t wanted);
    const TverbergCertificate& partial() const noexcept { return partial_; }

private:
    TverbergCertificate partial_;
};

// Finds a deep point, then r times takes the lexicographically first rainbow tuple of unused
// points whose closed simplex contains it.
ExtractionResult extract(const ColoredConfiguration& cfg, std::uint64_t r, const ExtractOptions& options = {});

} // namespace sdepth::tverberg
