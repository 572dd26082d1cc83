#pragma once

#include "solq/bijection.hpp"
#include "solq/family.hpp"
#include "solq/involution.hpp"
#include "solq/qseries.hpp"
#include "solq/registry.hpp"

#include <string>

namespace solq {

// JSON wire formats. Partitions are arrays of increasing integers; family
// tags are {"family": ..., "params": {...}}; series carry decimal-string
// coefficients so arbitrary precision survives the round trip.

std::string to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

std::string to_json(const FamilyTag& tag);
FamilyTag family_from_json(const std::string& text);

std::string to_json(const QSeries& s);
QSeries qseries_from_json(const std::string& text);

std::string to_json(const MoveTrace& trace);
std::string to_json(const LabeledPartition& a);
LabeledPartition labeled_from_json(const std::string& text);
std::string to_json(const WeightedPair& pair);

std::string to_json(const PsiOrbits& orbits, long long n);
std::string to_json(const ThetaOrbits& orbits, long long n);
std::string to_json(const PsiResult& result, const Partition& input);
std::string to_json(const ThetaResult& result, const WeightedPair& input);

std::string to_json(const VerificationReport& report);

/// Golden files live under <dir>/v1 keyed by identity id and order.
std::string golden_path(const std::string& dir, const std::string& id, int order);

} // namespace solq
