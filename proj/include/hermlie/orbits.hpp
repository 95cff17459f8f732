#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hermlie/groups.hpp"

namespace hermlie::orbits {

enum class Ambient { sl, so, sp };

std::string ambient_name(Ambient a);

/// Nilpotent orbit label: weakly decreasing positive parts summing to N,
/// subject to the parity-multiplicity constraint of the ambient type.
struct Partition {
    std::vector<long> parts;
    Ambient amb;
    long N;

    friend bool operator==(const Partition&, const Partition&) = default;
    std::string str() const;  // exponent form, e.g. (3,1^9)
};

bool parts_valid(const std::vector<long>& parts, Ambient amb);

Partition make_partition(std::vector<long> parts, Ambient amb);

Partition transpose(const Partition& p);

/// Complex dimension of the orbit labeled by p (classical formulas from the
/// transpose partition).  Always even.
long orbit_dim(const Partition& p);

/// Dominance order on valid partitions: realizes the closure order.
bool closure_leq(const Partition& p, const Partition& q);

enum class Execution { serial, parallel };

/// All valid partitions of N for the ambient type.
std::vector<Partition> valid_partitions(Ambient amb, long N,
                                        Execution ex = Execution::serial);

struct OrbitRecord {
    std::string label;         // partition string or Bala-Carter label
    std::vector<long> parts;   // empty for exceptional records
    long dim = 0;
    bool covers_minimal = false;
    bool very_even_pair = false;  // type D label standing for two orbits
};

/// Minimal nonzero orbit; degenerate ambients (no nonzero nilpotents) raise.
Partition minimal_orbit(Ambient amb, long N);

/// Orbits whose closure is exactly {orbit, minimal, zero}.
std::vector<OrbitRecord> next_to_minimal_orbits(Ambient amb, long N);

/// Partial exceptional tables: zero, minimal and next-to-minimal records.
std::vector<OrbitRecord> exceptional_orbits(Case cs);
std::vector<OrbitRecord> next_to_minimal_exceptional(Case cs);

/// The unique orbit of the complexification whose dimension equals
/// 2 * gk_dimension(datum); raises ConsistencyError if not unique.  For
/// e6/e7 the uniqueness is relative to the partial table.
OrbitRecord match_associated_variety(const GroupDatum& d, int fit_range = 0);

/// Orbit poset export: nodes (label, dim) and covering-relation edges.
nlohmann::json poset_json(Ambient amb, long N);

}  // namespace hermlie::orbits
