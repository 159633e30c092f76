#include "dnacode/lexicode.hpp"

#include "dnacode/scan.hpp"
#include "dnacode/verify.hpp"

namespace dnacode {

Code construct(const CodeParams& params, const OffsetSpec& spec) {
    params.validate();
    validate_offset(params.n, spec);

    const int n = params.n, d = params.d, w = params.w;
    const std::uint64_t lanes = lane_mask(n);
    const bool cross = params.kind != ConstraintKind::GC;

    std::vector<std::uint64_t> accepted;
    std::vector<std::uint64_t> images;  // image(accepted[i]) under the kind

    WordStream stream(n, spec);
    while (auto bits = stream.next()) {
        std::uint64_t cand = *bits;
        if (packed_gc_content(cand, lanes) != w) continue;

        std::uint64_t img = 0;
        if (cross) {
            img = params.kind == ConstraintKind::GC_RC
                      ? packed_reverse_complement(cand, n)
                      : packed_reverse(cand, n);
            // self-pair constraint, enforced at candidate time
            if (packed_hamming(cand, img, lanes) < d) continue;
        }
        if (!min_distance_at_least(cand, accepted, d, lanes)) continue;
        // H(x, y^img) = H(y, x^img) for both RC and R, so one direction covers
        // all ordered pairs
        if (cross && !min_distance_at_least(cand, images, d, lanes)) continue;

        accepted.push_back(cand);
        if (cross) images.push_back(img);
    }

    Code code;
    code.params = params;
    code.spec = spec;
    code.words.reserve(accepted.size());
    for (std::uint64_t bits : accepted) code.words.emplace_back(n, bits);
    return code;
}

void register_result(BoundEngine& engine, const Code& code) {
    VerifyReport report = verify(code);
    if (!report.pass)
        throw std::invalid_argument("register_result: code fails verification");
    std::string prov = "lexicode";
    if (code.spec) prov += "(" + offset_to_string(*code.spec) + ")";
    engine.register_construction(code.params.n, code.params.d, code.params.w, code.params.kind,
                                 code.size(), prov);
}

}  // namespace dnacode
