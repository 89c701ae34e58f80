#include "pierce/setsystem.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "pierce/errors.hpp"

namespace pierce::sets {

using Bitset = boost::dynamic_bitset<>;

void validate(const SetSystem& s) {
    if (s.ground_size < 0)
        throw SchemaError("ground_size must be non-negative");
    if (!s.labels.empty() && s.labels.size() != s.sets.size())
        throw SchemaError("labels, when present, must match the number of sets");
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const auto& set = s.sets[i];
        for (std::size_t k = 0; k < set.size(); ++k) {
            if (set[k] < 0 || set[k] >= s.ground_size)
                throw SchemaError("set " + std::to_string(i) + " references element " +
                                  std::to_string(set[k]) + " outside the ground set");
            if (k > 0 && set[k] <= set[k - 1])
                throw SchemaError("set " + std::to_string(i) +
                                  " is not strictly increasing");
        }
    }
}

namespace {

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return true;
}

// element -> bitset of member sets containing it
std::vector<Bitset> membership_masks(const SetSystem& s) {
    std::vector<Bitset> mask(s.ground_size, Bitset(s.sets.size()));
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        for (int e : s.sets[i]) mask[e].set(i);
    return mask;
}

} // namespace

// --- matching number: branch and bound on the disjointness graph ---------

namespace {

struct PackingSearch {
    std::vector<Bitset> compatible; // compatible[i]: sets disjoint from i
    int best = 0;

    void run(int chosen, const Bitset& candidates) {
        best = std::max(best, chosen);
        if (chosen + static_cast<int>(candidates.count()) <= best) return;
        for (auto k = candidates.find_first(); k != Bitset::npos;
             k = candidates.find_next(k)) {
            Bitset next = candidates & compatible[k];
            // only extend with higher indices to avoid revisiting subsets
            for (auto j = next.find_first(); j != Bitset::npos && j <= k;
                 j = next.find_next(j))
                next.reset(j);
            run(chosen + 1, next);
            if (chosen + static_cast<int>(candidates.count()) <= best) return;
        }
    }
};

} // namespace

int matching_number(const SetSystem& s) {
    const int n = static_cast<int>(s.sets.size());
    if (n == 0) return 0;
    PackingSearch search;
    search.compatible.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (disjoint(s.sets[i], s.sets[j])) {
                search.compatible[i].set(j);
                search.compatible[j].set(i);
            }
    Bitset all(n);
    all.set();
    search.run(0, all);
    return search.best;
}

// --- transversal number ---------------------------------------------------

namespace {

// One hitting pattern: the subset of member sets some ground element hits.
// Elements with identical or dominated patterns are interchangeable for a
// minimum transversal, so the search runs over maximal patterns only.
std::vector<Bitset> hitting_classes(const SetSystem& s) {
    std::vector<Bitset> classes;
    for (const Bitset& m : membership_masks(s)) {
        if (m.none()) continue;
        bool dominated = false;
        for (auto& c : classes) {
            if (m.is_subset_of(c)) { dominated = true; break; }
        }
        if (dominated) continue;
        std::erase_if(classes, [&](const Bitset& c) { return c.is_subset_of(m); });
        classes.push_back(m);
    }
    return classes;
}

struct HittingSearch {
    const SetSystem* s = nullptr;
    std::vector<Bitset> classes;
    std::vector<std::vector<int>> hitters; // set -> classes hitting it
    int nsets = 0;
    int best = 0;

    int greedy_upper(Bitset covered) const {
        int picks = 0;
        while (covered.count() != static_cast<std::size_t>(nsets)) {
            std::size_t best_gain = 0, best_class = 0;
            for (std::size_t c = 0; c < classes.size(); ++c) {
                const std::size_t gain = (classes[c] - covered).count();
                if (gain > best_gain) { best_gain = gain; best_class = c; }
            }
            covered |= classes[best_class];
            ++picks;
        }
        return picks;
    }

    // Greedy pairwise-disjoint uncovered sub-collection; its size lower
    // bounds the matching number of the uncovered part, hence the number
    // of further elements any transversal still needs.
    int disjoint_lower(const Bitset& covered) const {
        std::vector<int> picked;
        int count = 0;
        for (int i = 0; i < nsets; ++i) {
            if (covered.test(i)) continue;
            bool ok = true;
            for (int p : picked)
                if (!disjoint(s->sets[i], s->sets[p])) { ok = false; break; }
            if (ok) { picked.push_back(i); ++count; }
        }
        return count;
    }

    void run(const Bitset& covered, int depth) {
        if (covered.count() == static_cast<std::size_t>(nsets)) {
            best = std::min(best, depth);
            return;
        }
        if (depth + disjoint_lower(covered) >= best) return;
        // branch on the uncovered set with the fewest hitting classes
        int pick = -1;
        std::size_t fewest = classes.size() + 1;
        for (int i = 0; i < nsets; ++i)
            if (!covered.test(i) && hitters[i].size() < fewest) {
                fewest = hitters[i].size();
                pick = i;
            }
        for (int c : hitters[pick]) run(covered | classes[c], depth + 1);
    }
};

} // namespace

int transversal_number(const SetSystem& s) {
    if (s.sets.empty()) return 0;
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        if (s.sets[i].empty())
            throw Infeasible("set " + std::to_string(i) +
                             " is empty: no transversal exists");
    HittingSearch search;
    search.s = &s;
    search.nsets = static_cast<int>(s.sets.size());
    search.classes = hitting_classes(s);
    search.hitters.assign(search.nsets, {});
    for (std::size_t c = 0; c < search.classes.size(); ++c)
        for (int i = 0; i < search.nsets; ++i)
            if (search.classes[c].test(i))
                search.hitters[i].push_back(static_cast<int>(c));
    search.best = search.greedy_upper(Bitset(search.nsets));
    search.run(Bitset(search.nsets), 0);
    return search.best;
}

// --- dyadic dual VC-dimension ---------------------------------------------

namespace {

// Looks for a witness of pair {i,j} within the chosen subfamily: the
// lowest element of F_i ∩ F_j avoiding every other chosen set.
int find_witness(const SetSystem& s, const std::vector<Bitset>& mask,
                 const Bitset& chosen_mask, int i, int j) {
    const auto& small = s.sets[i].size() <= s.sets[j].size() ? s.sets[i] : s.sets[j];
    const int other = s.sets[i].size() <= s.sets[j].size() ? j : i;
    for (int e : small) {
        if (!mask[e].test(other)) continue;
        Bitset hit = mask[e] & chosen_mask;
        if (hit.count() == 2) return e; // exactly {i,j} within chosen
    }
    return -1;
}

bool chosen_feasible(const SetSystem& s, const std::vector<Bitset>& mask,
                     const std::vector<int>& chosen) {
    Bitset chosen_mask(s.sets.size());
    for (int i : chosen) chosen_mask.set(i);
    for (std::size_t a = 0; a < chosen.size(); ++a)
        for (std::size_t b = a + 1; b < chosen.size(); ++b)
            if (find_witness(s, mask, chosen_mask, chosen[a], chosen[b]) < 0)
                return false;
    return true;
}

struct LambdaSearch {
    const SetSystem* s = nullptr;
    std::vector<Bitset> mask;
    std::vector<int> best;
    std::vector<int> current;
    int nsets = 0;

    void run(int start) {
        if (current.size() > best.size()) best = current;
        for (int k = start; k < nsets; ++k) {
            // even taking every remaining set cannot beat the incumbent
            if (current.size() + static_cast<std::size_t>(nsets - k) <= best.size())
                break;
            current.push_back(k);
            if (chosen_feasible(*s, mask, current)) run(k + 1);
            current.pop_back();
        }
    }
};

} // namespace

std::optional<LambdaCertificate> lambda_feasible(const SetSystem& s,
                                                 const std::vector<int>& chosen) {
    const int n = static_cast<int>(s.sets.size());
    Bitset chosen_mask(n);
    for (int i : chosen) {
        if (i < 0 || i >= n)
            throw InvalidIndex("chosen set index " + std::to_string(i) +
                               " is out of range");
        if (chosen_mask.test(i))
            throw InvalidIndex("chosen set index " + std::to_string(i) +
                               " is repeated");
        chosen_mask.set(i);
    }
    const auto mask = membership_masks(s);
    LambdaCertificate cert;
    cert.chosen = chosen;
    std::sort(cert.chosen.begin(), cert.chosen.end());
    for (std::size_t a = 0; a < cert.chosen.size(); ++a)
        for (std::size_t b = a + 1; b < cert.chosen.size(); ++b) {
            const int i = cert.chosen[a], j = cert.chosen[b];
            const int w = find_witness(s, mask, chosen_mask, i, j);
            if (w < 0) return std::nullopt;
            cert.witnesses[{i, j}] = w;
        }
    return cert;
}

std::pair<int, std::optional<LambdaCertificate>> dyadic_dual_vc(const SetSystem& s) {
    if (s.sets.empty()) return {0, std::nullopt};
    LambdaSearch search;
    search.s = &s;
    search.mask = membership_masks(s);
    search.nsets = static_cast<int>(s.sets.size());
    // singletons are vacuously feasible, so the search starts from {0}
    search.best = {0};
    search.run(0);
    auto cert = lambda_feasible(s, search.best);
    assert(cert.has_value());
    return {static_cast<int>(search.best.size()), std::move(cert)};
}

bool certificate_valid(const SetSystem& s, const LambdaCertificate& cert) {
    const int n = static_cast<int>(s.sets.size());
    for (int i : cert.chosen)
        if (i < 0 || i >= n) return false;
    std::vector<int> sorted = cert.chosen;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    const std::size_t pairs = cert.chosen.size() * (cert.chosen.size() - 1) / 2;
    if (cert.witnesses.size() != pairs) return false;
    for (const auto& [pair, e] : cert.witnesses) {
        const auto [i, j] = pair;
        if (i >= j) return false;
        if (!std::binary_search(sorted.begin(), sorted.end(), i)) return false;
        if (!std::binary_search(sorted.begin(), sorted.end(), j)) return false;
        if (e < 0 || e >= s.ground_size) return false;
        for (int k : sorted) {
            const bool contains =
                std::binary_search(s.sets[k].begin(), s.sets[k].end(), e);
            const bool should = (k == i || k == j);
            if (contains != should) return false;
        }
    }
    return true;
}

// --- VC-dimension -----------------------------------------------------------

namespace {

bool some_subset_shattered(const SetSystem& s, int d, std::vector<int>& subset,
                           int start) {
    if (static_cast<int>(subset.size()) == d) {
        std::vector<bool> seen(std::size_t{1} << d, false);
        std::size_t distinct = 0;
        for (const auto& set : s.sets) {
            std::size_t trace = 0;
            for (int b = 0; b < d; ++b)
                if (std::binary_search(set.begin(), set.end(), subset[b]))
                    trace |= std::size_t{1} << b;
            if (!seen[trace]) {
                seen[trace] = true;
                if (++distinct == (std::size_t{1} << d)) return true;
            }
        }
        return false;
    }
    for (int e = start; e < s.ground_size; ++e) {
        subset.push_back(e);
        if (some_subset_shattered(s, d, subset, e + 1)) return true;
        subset.pop_back();
    }
    return false;
}

} // namespace

int vc_dimension(const SetSystem& s) {
    if (s.ground_size == 0 || s.sets.empty()) return 0;
    int vc = 0;
    for (int d = 1; d <= s.ground_size; ++d) {
        // a shattered d-subset needs 2^d distinct traces
        if ((std::size_t{1} << d) > s.sets.size()) break;
        std::vector<int> subset;
        if (!some_subset_shattered(s, d, subset, 0)) break;
        vc = d;
    }
    return vc;
}

// --- bounds -----------------------------------------------------------------

BigInt dsw_bound(int lambda, int nu) {
    if (lambda < 0 || nu < 0)
        throw std::invalid_argument("dsw_bound arguments must be non-negative");
    const BigInt binom = binomial(lambda + nu, lambda);
    return BigInt(11) * lambda * lambda * (lambda + nu + 3) * binom * binom;
}

BoundReport analyze(const SetSystem& s) {
    BoundReport r;
    r.nu = matching_number(s);
    r.tau = transversal_number(s);
    r.lambda = dyadic_dual_vc(s).first;
    r.dsw_bound = dsw_bound(r.lambda, r.nu);
    r.theorem1_bound = dsw_bound(4, r.nu);
    r.degenerate = (r.lambda == 0);
    if (r.nu > r.tau)
        throw std::logic_error("solver bug: nu > tau");
    if (r.lambda >= 1 && r.nu >= 1 && BigInt(r.tau) > r.dsw_bound)
        throw std::logic_error("solver bug: tau exceeds the DSW bound");
    return r;
}

} // namespace pierce::sets
