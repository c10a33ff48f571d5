#include "kc/enumerate.hpp"

#include <map>
#include <stdexcept>

#include "kc/fixtures.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t hash_vector(const BlockVector& v) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (int i = 0; i < kNumBlockTypes; ++i) h = splitmix64(h ^ static_cast<std::uint64_t>(v[i]));
    return h;
}

// enumerate vectors with coordinates >= from position `pos`, remaining sum
template <typename F>
void enumerate_rest(BlockVector& v, int pos, int left, const F& f) {
    if (pos == kNumBlockTypes - 1) {
        for (int val = 0; val <= left; ++val) {
            v[pos] = val;
            f(v);
        }
        v[pos] = 0;
        return;
    }
    for (int val = 0; val <= left; ++val) {
        v[pos] = val;
        enumerate_rest(v, pos + 1, left - val, f);
    }
    v[pos] = 0;
}

RoundTripReport roundtrip_chunk(int c0, int c1, int max_sum) {
    RoundTripReport rep;
    BlockVector v;
    v[0] = c0;
    v[1] = c1;
    enumerate_rest(v, 2, max_sum - c0 - c1, [&](const BlockVector& w) {
        rep.vectors++;
        if (!is_admissible(w)) return;
        rep.admissible++;
        rep.checksum += hash_vector(w);
        try {
            if (!(reconstruct(params(w)) == w)) rep.failures++;
        } catch (const std::runtime_error&) {
            rep.failures++;
        }
    });
    return rep;
}

BlockVector random_vector(std::uint64_t seed, std::uint64_t i, int max_entry) {
    BlockVector v;
    std::uint64_t h = splitmix64(seed ^ (0x100000001b3ULL * (i + 1)));
    for (int k = 0; k < kNumBlockTypes; ++k) {
        h = splitmix64(h);
        v[k] = static_cast<int>(h % static_cast<std::uint64_t>(max_entry + 1));
    }
    return v;
}

bool identities_hold(const BlockVector& v) {
    ParamVector p = params(v);
    DerivedVector d = derived(p);  // parity always even on genuine vectors
    if (p.kappa != v.t1 + v.t2) return false;
    if (d.eta != -v.x + v.z + v.t2) return false;
    if (d.sigma != -v.x + v.y + v.t2) return false;
    if (d.eta != d.a_plus + d.a_minus - p.iv_zero) return false;
    // table route and column route agree
    if (!(derived_of(v) == d)) return false;
    return true;
}

SweepReport sweep_pair(const SweepInput& in, int i, int j) {
    SweepReport rep;
    rep.tuples = 1;
    const long long S = in.crossing_numbers[i] + in.crossing_numbers[j];
    Diagram d = Diagram::connected_sum(in.diagrams[i], in.diagrams[j]);
    if (d.crossings() != S) rep.crossing_sum_failures++;
    if (static_cast<int>(d.faces().size()) != d.crossings() + 2) rep.face_identity_failures++;
    BoundReport br = make_bound_report({}, S, d.crossings());
    if (!br.verdict) rep.verdict_failures++;
    rep.checksum = splitmix64((static_cast<std::uint64_t>(i) << 32) ^
                              static_cast<std::uint64_t>(j) ^ (br.verdict ? 1 : 0));
    return rep;
}

SweepReport sweep_triple(const SweepInput& in, int i, int j, int k, const Diagram& dij) {
    SweepReport rep;
    rep.tuples = 1;
    const long long S =
        in.crossing_numbers[i] + in.crossing_numbers[j] + in.crossing_numbers[k];
    Diagram d = Diagram::connected_sum(dij, in.diagrams[k]);
    if (d.crossings() != S) rep.crossing_sum_failures++;
    if (static_cast<int>(d.faces().size()) != d.crossings() + 2) rep.face_identity_failures++;
    BoundReport br = make_bound_report({}, S, d.crossings());
    if (!br.verdict) rep.verdict_failures++;
    rep.checksum = splitmix64((static_cast<std::uint64_t>(i) << 42) ^
                              (static_cast<std::uint64_t>(j) << 21) ^
                              static_cast<std::uint64_t>(k) ^ (br.verdict ? 1 : 0));
    return rep;
}

void accumulate(SweepReport& into, const SweepReport& part) {
    into.tuples += part.tuples;
    into.verdict_failures += part.verdict_failures;
    into.crossing_sum_failures += part.crossing_sum_failures;
    into.face_identity_failures += part.face_identity_failures;
    into.checksum += part.checksum;
}

}  // namespace

RoundTripReport roundtrip_admissible_serial(int max_sum) {
    RoundTripReport rep;
    for (int c0 = 0; c0 <= max_sum; ++c0)
        for (int c1 = 0; c0 + c1 <= max_sum; ++c1) {
            RoundTripReport part = roundtrip_chunk(c0, c1, max_sum);
            rep.vectors += part.vectors;
            rep.admissible += part.admissible;
            rep.failures += part.failures;
            rep.checksum += part.checksum;
        }
    return rep;
}

RoundTripReport roundtrip_admissible_parallel(int max_sum) {
    std::vector<std::pair<int, int>> chunks;
    for (int c0 = 0; c0 <= max_sum; ++c0)
        for (int c1 = 0; c0 + c1 <= max_sum; ++c1) chunks.emplace_back(c0, c1);
    RoundTripReport rep;
    std::uint64_t vectors = 0, admissible = 0, failures = 0, checksum = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : vectors, admissible, failures, checksum)
#endif
    for (long idx = 0; idx < static_cast<long>(chunks.size()); ++idx) {
        RoundTripReport part = roundtrip_chunk(chunks[idx].first, chunks[idx].second, max_sum);
        vectors += part.vectors;
        admissible += part.admissible;
        failures += part.failures;
        checksum += part.checksum;
    }
    rep.vectors = vectors;
    rep.admissible = admissible;
    rep.failures = failures;
    rep.checksum = checksum;
    return rep;
}

CollisionReport param_collision_search(int max_sum) {
    CollisionReport rep;
    std::map<std::array<int, 7>, std::vector<BlockVector>> by_params;
    BlockVector v;
    enumerate_rest(v, 0, max_sum, [&](const BlockVector& w) {
        ParamVector p = params(w);
        std::array<int, 7> key = {p.iv_plus, p.iv_zero, p.iv_minus, p.h1_plus,
                                  p.h1_minus, p.h2,     p.kappa};
        by_params[key].push_back(w);
    });
    for (const auto& [key, vs] : by_params) {
        if (vs.size() < 2) continue;
        rep.collision_classes++;
        int admissible_here = 0;
        for (const auto& w : vs) admissible_here += is_admissible(w) ? 1 : 0;
        if (admissible_here > 1) rep.admissible_collisions++;
        if (!rep.example.found) {
            for (size_t a = 0; a < vs.size() && !rep.example.found; ++a)
                for (size_t b = a + 1; b < vs.size() && !rep.example.found; ++b) {
                    if (!is_admissible(vs[a]) || !is_admissible(vs[b])) {
                        rep.example.a = vs[a];
                        rep.example.b = vs[b];
                        rep.example.found = true;
                    }
                }
        }
    }
    return rep;
}

IdentityReport identity_suite_serial(std::uint64_t n, std::uint64_t seed, int max_entry) {
    IdentityReport rep;
    for (std::uint64_t i = 0; i < n; ++i) {
        BlockVector v = random_vector(seed, i, max_entry);
        rep.checked++;
        if (!identities_hold(v)) rep.violations++;
        rep.checksum += hash_vector(v);
    }
    return rep;
}

IdentityReport identity_suite_parallel(std::uint64_t n, std::uint64_t seed, int max_entry) {
    std::uint64_t checked = 0, violations = 0, checksum = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : checked, violations, checksum)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        BlockVector v = random_vector(seed, static_cast<std::uint64_t>(i), max_entry);
        checked++;
        if (!identities_hold(v)) violations++;
        checksum += hash_vector(v);
    }
    return IdentityReport{checked, violations, checksum};
}

SweepInput sweep_input_from_fixtures() {
    SweepInput in;
    for (const auto& f : bundled_fixtures()) {
        in.names.push_back(f.name);
        in.crossing_numbers.push_back(f.crossings);
        in.diagrams.push_back(f.diagram);
    }
    return in;
}

SweepReport bound_sweep_serial(const SweepInput& in, bool triples) {
    SweepReport rep;
    const int n = static_cast<int>(in.names.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            accumulate(rep, sweep_pair(in, i, j));
            if (!triples) continue;
            Diagram dij = Diagram::connected_sum(in.diagrams[i], in.diagrams[j]);
            for (int k = j; k < n; ++k) accumulate(rep, sweep_triple(in, i, j, k, dij));
        }
    }
    return rep;
}

SweepReport bound_sweep_parallel(const SweepInput& in, bool triples) {
    const int n = static_cast<int>(in.names.size());
    std::uint64_t tuples = 0, verdicts = 0, sums = 0, faces = 0, checksum = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : tuples, verdicts, sums, faces, checksum)
#endif
    for (int i = 0; i < n; ++i) {
        SweepReport local;
        for (int j = i; j < n; ++j) {
            accumulate(local, sweep_pair(in, i, j));
            if (!triples) continue;
            Diagram dij = Diagram::connected_sum(in.diagrams[i], in.diagrams[j]);
            for (int k = j; k < n; ++k) accumulate(local, sweep_triple(in, i, j, k, dij));
        }
        tuples += local.tuples;
        verdicts += local.verdict_failures;
        sums += local.crossing_sum_failures;
        faces += local.face_identity_failures;
        checksum += local.checksum;
    }
    return SweepReport{tuples, verdicts, sums, faces, checksum};
}

}  // namespace kc
