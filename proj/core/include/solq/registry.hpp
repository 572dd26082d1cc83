#pragma once

#include "solq/double_sum.hpp"
#include "solq/gf.hpp"
#include "solq/qseries.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace solq {

enum class Mode { series, enumeration, pairing, counting };

const char* to_string(Mode m) noexcept;

struct MismatchDetail {
    long long at = 0; // q-exponent or weight of the first failure
    std::string lhs, rhs;
};

struct VerificationReport {
    std::string id;
    Mode mode = Mode::series;
    long long order = 0; // truncation order or weight bound actually used
    bool equal = true;
    std::optional<MismatchDetail> mismatch;
    double wall_ms = 0.0;
};

/// Binds each identity to its two series sides and combinatorial checks.
/// Immutable after construction; verifications are independent pure
/// computations and safe to run concurrently.
class IdentityRegistry {
public:
    static const IdentityRegistry& instance();

    std::vector<std::string> ids() const;
    bool has(const std::string& id) const;
    std::set<Mode> modes(const std::string& id) const;
    long long default_bound(const std::string& id, Mode mode) const;

    /// The sum side (double or finite sum) and the product/assembled side.
    QSeries lhs(const std::string& id, int order) const;
    QSeries rhs(const std::string& id, int order) const;

    VerificationReport verify_series(const std::string& id, int order) const;
    VerificationReport verify_enumeration(const std::string& id, int order) const;
    VerificationReport verify_counting(const std::string& id, long long n_max) const;
    VerificationReport verify_pairing(const std::string& id, long long weight) const;

    VerificationReport verify(const std::string& id, Mode mode, long long bound) const;

private:
    IdentityRegistry();
    struct Impl;
    const Impl* impl_;
};

} // namespace solq
