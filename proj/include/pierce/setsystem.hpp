#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pierce/numeric.hpp"

namespace pierce::sets {

// A finite set system: ground elements 0..ground_size-1 and an ordered
// list of member sets. Duplicate and empty member sets are legal inputs;
// duplicates are counted separately throughout.
struct SetSystem {
    int ground_size = 0;
    std::vector<std::vector<int>> sets; // each strictly increasing
    std::vector<std::string> labels;    // empty, or one label per set
};

// Throws SchemaError when the invariants above do not hold.
void validate(const SetSystem& s);

// Unordered pair of set indices, stored with first < second.
using IndexPair = std::pair<int, int>;

// Witness structure proving that the chosen sets pairwise intersect in
// elements private to each pair (within the chosen subfamily).
struct LambdaCertificate {
    std::vector<int> chosen;              // ascending set indices
    std::map<IndexPair, int> witnesses;   // {i,j} -> ground element
};

// Independent re-validation of a certificate against its system.
bool certificate_valid(const SetSystem& s, const LambdaCertificate& cert);

struct BoundReport {
    int nu = 0;
    int tau = 0;
    int lambda = 0;
    BigInt dsw_bound;      // exact bound at (lambda, nu)
    BigInt theorem1_bound; // exact bound at (4, nu)
    bool degenerate = false; // lambda == 0, bound formula vacuous
};

// Maximum number of pairwise disjoint member sets.
int matching_number(const SetSystem& s);

// Minimum number of ground elements hitting every member set.
// Throws Infeasible when some member set is empty.
int transversal_number(const SetSystem& s);

// Certificate for the chosen subfamily, or nullopt when some pair has
// no witness. Witnesses avoid only the other chosen sets and are the
// lowest qualifying ground element. Throws InvalidIndex.
std::optional<LambdaCertificate> lambda_feasible(const SetSystem& s,
                                                 const std::vector<int>& chosen);

// Exact dyadic dual VC-dimension with a witnessing certificate
// (certificate present whenever the value is >= 1).
std::pair<int, std::optional<LambdaCertificate>> dyadic_dual_vc(const SetSystem& s);

// Classical VC-dimension: size of the largest shattered subset of the
// ground set. 0 for an empty ground set or an empty family.
int vc_dimension(const SetSystem& s);

// 11*lambda^2*(lambda+nu+3)*C(lambda+nu,lambda)^2, exactly.
BigInt dsw_bound(int lambda, int nu);

// Runs all solvers and evaluates both bounds. Throws Infeasible when a
// member set is empty.
BoundReport analyze(const SetSystem& s);

} // namespace pierce::sets
