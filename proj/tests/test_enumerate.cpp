#include <doctest.h>

#include <random>
#include <set>

#include "vck/enumerate.hpp"

using namespace vck;

namespace {

// Oracle: all biquandles on n elements by scanning every bijection of X^2,
// no constraint propagation.
std::vector<SolutionTable> brute_biquandles(int n) {
    int m = n * n;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::set<CanonicalKey> keys;
    std::vector<SolutionTable> reps;
    do {
        SolutionTable t(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int img = perm[x * n + y];
                t.set(x, y, img / n, img % n);
            }
        if (!try_biquandle(t)) continue;
        CanonicalKey k = canonical_key(t);
        if (keys.insert(k).second) reps.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return reps;
}

}  // namespace

TEST_CASE("biquandles of size 2: flip and antiflip") {
    auto classes = enumerate_biquandles(2);
    CHECK(classes.size() == 2);
    std::set<CanonicalKey> keys;
    for (const auto& t : classes) keys.insert(canonical_key(t));
    CHECK(keys.count(canonical_key(make_named("flip", 2))));
    CHECK(keys.count(canonical_key(make_named("antiflip", 2))));
}

TEST_CASE("biquandle count at n=3 matches the unpruned oracle") {
    auto fast = enumerate_biquandles(3);
    auto slow = brute_biquandles(3);
    CHECK(fast.size() == slow.size());
    std::set<CanonicalKey> a, b;
    for (const auto& t : fast) a.insert(canonical_key(t));
    for (const auto& t : slow) b.insert(canonical_key(t));
    CHECK(a == b);
}

TEST_CASE("size limits are enforced") {
    CHECK_THROWS(enumerate_biquandles(6));
    CHECK_THROWS(enumerate_virtual_pairs(5, PairMode::All, /*allow_long=*/false));
    CHECK_THROWS(enumerate_involutive(8));
}

TEST_CASE("involutive solutions of size 2") {
    auto classes = enumerate_involutive(2);
    std::set<CanonicalKey> keys;
    for (const auto& t : classes) keys.insert(canonical_key(t));
    CHECK(keys.count(canonical_key(make_named("flip", 2))));
    CHECK(keys.count(canonical_key(make_named("antiflip", 2))));
    CHECK(classes.size() == 2);
}

TEST_CASE("involutive class counts for small sizes") {
    CHECK(enumerate_involutive(3).size() == 5);
    CHECK(enumerate_involutive(4).size() == 23);
}

TEST_CASE("canonical key is relabeling invariant") {
    std::mt19937 rng(3);
    for (const char* name : {"z4", "pair248", "kishino4-flip"}) {
        VirtualPair vp = make_named_pair(name);
        CanonicalKey k = canonical_key(vp);
        std::vector<int> phi(vp.n());
        for (int i = 0; i < vp.n(); ++i) phi[i] = i;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(phi.begin(), phi.end(), rng);
            VirtualPair relabeled = make_virtual_pair(vp.S.table.relabel(phi),
                                                      vp.beta.table.relabel(phi));
            CHECK(canonical_key(relabeled) == k);
        }
    }
}

TEST_CASE("are_isomorphic agrees with canonical keys") {
    VirtualPair p = make_named_pair("flip2-flip2");
    VirtualPair q = make_virtual_pair(make_named("antiflip", 2), make_named("flip", 2));
    CHECK(are_isomorphic(p, p).has_value());
    CHECK(!are_isomorphic(p, q).has_value());
    CHECK((canonical_key(p) == canonical_key(q)) == are_isomorphic(p, q).has_value());

    // a relabeled copy is recovered
    VirtualPair z4 = make_named_pair("z4");
    std::vector<int> phi = {2, 0, 3, 1};
    VirtualPair rel = make_virtual_pair(z4.S.table.relabel(phi), z4.beta.table.relabel(phi));
    auto found = are_isomorphic(z4, rel);
    REQUIRE(found.has_value());
    CHECK(z4.S.table.relabel(*found) == rel.S.table);
    CHECK(z4.beta.table.relabel(*found) == rel.beta.table);
}

TEST_CASE("virtual pairs at n=2: the census column") {
    auto all = enumerate_virtual_pairs(2, PairMode::All);
    auto aut = enumerate_virtual_pairs(2, PairMode::AutInduced);
    CHECK(all.size() == 4);
    CHECK(aut.size() == 4);
    CensusRow row = census(2);
    CHECK(row.all_pairs == 4);
    CHECK(row.aut_induced_pairs == 4);
    CHECK(row.connected_pairs == 3);
    CHECK(row.connected_with_both_disconnected == 0);
}

TEST_CASE("aut-induced pairs embed into all pairs (n<=3)") {
    for (int n = 2; n <= 3; ++n) {
        std::set<CanonicalKey> all_keys;
        for (const auto& pc : enumerate_virtual_pairs(n, PairMode::All))
            all_keys.insert(pc.key);
        for (const auto& pc : enumerate_virtual_pairs(n, PairMode::AutInduced))
            CHECK(all_keys.count(pc.key));
    }
}

TEST_CASE("every enumerated pair re-verifies") {
    for (const auto& pc : enumerate_virtual_pairs(3, PairMode::All)) {
        CHECK(check_mixed_relation(pc.S, pc.beta));
        Biquandle S = as_biquandle(pc.S);
        Biquandle beta = as_biquandle(pc.beta);
        // the involutive ones are virtual pairs in the strict sense
        if (pc.beta_involutive) CHECK(check_virtual_pair(S, beta));
    }
}

TEST_CASE("aut-induced pairs always have involutive beta") {
    for (const auto& pc : enumerate_virtual_pairs(3, PairMode::AutInduced))
        CHECK(pc.beta_involutive);
}

TEST_CASE("census n=3") {
    CensusRow row = census(3);
    CHECK(row.all_pairs == 90);
    // The published table says 38 here, but the value consistent with its
    // own n=2 and n=4 entries (and with direct class counting) is 36; the
    // census reports the computed number and the CLI flags the difference.
    CHECK(row.aut_induced_pairs == 36);
    CHECK(row.connected_pairs == 26);
    CHECK(row.connected_with_both_disconnected == 0);
    REQUIRE(reference_census(3).has_value());
    CHECK(reference_census(3)->aut_induced_pairs == 38);
}

TEST_CASE("census n=4") {
    CensusRow row = census(4);
    CHECK(row.all_pairs == 3517);
    CHECK(row.aut_induced_pairs == 325);
    CHECK(row.connected_pairs == 167);
    CHECK(row.connected_with_both_disconnected == 10);
}

TEST_CASE("keys file round trip") {
    std::vector<CanonicalKey> keys;
    for (const auto& pc : enumerate_virtual_pairs(2, PairMode::All)) keys.push_back(pc.key);
    std::string path = "test_keys.tmp";
    write_keys_file(path, keys);
    auto back = read_keys_file(path);
    std::sort(keys.begin(), keys.end());
    CHECK(back == keys);
    std::remove(path.c_str());
}
