#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "copq/errors.hpp"
#include "copq/instance.hpp"
#include "copq/instance_io.hpp"
#include "copq/rng.hpp"

using namespace copq;

namespace {

TspInstance uniform_tsp(int n) {
    TspInstance inst;
    inst.name = "uniform";
    inst.d = SquareMatrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) inst.d.at(i, j) = 1.0;
        }
    }
    return inst;
}

// Independent exhaustive minimizer: recursive enumeration instead of
// std::next_permutation, so it cannot share a bug with the library version.
void enumerate(const ProblemInstance& inst, Permutation& prefix, std::vector<bool>& used,
               double& best) {
    const int n = instance_size(inst);
    if (static_cast<int>(prefix.size()) == n) {
        best = std::min(best, instance_cost(inst, prefix));
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        prefix.push_back(v);
        enumerate(inst, prefix, used, best);
        prefix.pop_back();
        used[v] = false;
    }
}

double exhaustive_min(const ProblemInstance& inst) {
    Permutation prefix;
    std::vector<bool> used(instance_size(inst), false);
    double best = std::numeric_limits<double>::infinity();
    enumerate(inst, prefix, used, best);
    return best;
}

} // namespace

TEST_CASE("tour cost walks the closed cycle") {
    TspInstance inst;
    inst.d = SquareMatrix(3);
    inst.d.at(0, 1) = 2;
    inst.d.at(1, 2) = 3;
    inst.d.at(2, 0) = 4;
    inst.d.at(1, 0) = 5;
    inst.d.at(2, 1) = 6;
    inst.d.at(0, 2) = 7;
    CHECK(tour_cost(inst, {0, 1, 2}) == 9.0);
    CHECK(tour_cost(inst, {0, 2, 1}) == 18.0);
}

TEST_CASE("tour cost is invariant under rotation of the tour") {
    const auto inst = std::get<TspInstance>(random_instance(true, 5, 11));
    Permutation pi{3, 1, 4, 0, 2};
    const double base = tour_cost(inst, pi);
    for (int r = 1; r < 5; ++r) {
        std::rotate(pi.begin(), pi.begin() + 1, pi.end());
        CHECK(tour_cost(inst, pi) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("assignment cost matches a hand expansion") {
    QapInstance inst;
    inst.b = SquareMatrix(2);
    inst.c = SquareMatrix(2);
    inst.b.at(0, 1) = 3;
    inst.b.at(1, 0) = 3;
    inst.c.at(0, 1) = 5;
    inst.c.at(1, 0) = 5;
    CHECK(qap_cost(inst, {0, 1}) == 30.0);
    CHECK(qap_cost(inst, {1, 0}) == 30.0);
}

TEST_CASE("brute force on the uniform 3-city tour") {
    const Optimum opt = brute_force_optimum(uniform_tsp(3));
    CHECK(opt.cost == 3.0);
    CHECK(opt.pi == Permutation{0, 1, 2});
}

TEST_CASE("brute force matches an independent enumeration") {
    for (const bool tsp : {true, false}) {
        for (std::uint64_t seed : {4u, 9u}) {
            const ProblemInstance inst = random_instance(tsp, 4, seed);
            CHECK(brute_force_optimum(inst).cost == doctest::Approx(exhaustive_min(inst)));
        }
    }
}

TEST_CASE("uniform symmetric assignment ties across all permutations") {
    QapInstance inst;
    inst.b = SquareMatrix(3);
    inst.c = SquareMatrix(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i != j) {
                inst.b.at(i, j) = 1;
                inst.c.at(i, j) = 1;
            }
        }
    }
    Permutation pi{0, 1, 2};
    do {
        CHECK(qap_cost(inst, pi) == 6.0);
    } while (std::next_permutation(pi.begin(), pi.end()));
    CHECK(brute_force_optimum(ProblemInstance{inst}).cost == 6.0);
}

TEST_CASE("brute force never loses to random permutations") {
    const ProblemInstance inst = random_instance(false, 5, 3);
    const double best = brute_force_optimum(inst).cost;
    Rng rng(99);
    Permutation pi(5);
    std::iota(pi.begin(), pi.end(), 0);
    for (int trial = 0; trial < 1000; ++trial) {
        for (int i = 4; i > 0; --i) std::swap(pi[i], pi[rng.next_int(0, i)]);
        CHECK(instance_cost(inst, pi) >= best);
    }
}

TEST_CASE("brute force guards its size") {
    CHECK_THROWS_AS(brute_force_optimum(random_instance(true, 10, 1)), SizeLimitError);
}

TEST_CASE("random instances are deterministic, symmetric, in range") {
    const ProblemInstance a = random_instance(true, 3, 42);
    const ProblemInstance b = random_instance(true, 3, 42);
    CHECK(std::get<TspInstance>(a).d == std::get<TspInstance>(b).d);

    const auto qap = std::get<QapInstance>(random_instance(false, 4, 7));
    for (int i = 0; i < 4; ++i) {
        CHECK(qap.b.at(i, i) == 0.0);
        CHECK(qap.c.at(i, i) == 0.0);
        for (int j = 0; j < 4; ++j) {
            CHECK(qap.b.at(i, j) == qap.b.at(j, i));
            CHECK(qap.c.at(i, j) == qap.c.at(j, i));
        }
    }

    const auto tsp = std::get<TspInstance>(random_instance(true, 5, 1));
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            CHECK(tsp.d.at(i, j) >= 1.0);
            CHECK(tsp.d.at(i, j) <= 10.0);
        }
    }

    CHECK_THROWS_AS(random_instance(true, 1, 1), std::invalid_argument);
}

TEST_CASE("matrix format parses the documented example") {
    const auto inst = parse_instance_text("3\n0 1 1\n1 0 1\n1 1 0\n", InstanceFormat::matrix);
    const auto& tsp = std::get<TspInstance>(inst);
    CHECK(tsp.size() == 3);
    CHECK(tsp.d.at(0, 1) == 1.0);
    CHECK(tsp.d.at(0, 0) == 0.0);
}

TEST_CASE("matrix format distinguishes one block from two") {
    const std::string qap_text = "2\n0 1\n1 0\n\n0 7\n7 0\n";
    const auto inst = parse_instance_text(qap_text, InstanceFormat::matrix);
    const auto& qap = std::get<QapInstance>(inst);
    CHECK(qap.b.at(0, 1) == 1.0);
    CHECK(qap.c.at(0, 1) == 7.0);
}

TEST_CASE("matrix format round-trips both problem kinds") {
    for (const bool tsp : {true, false}) {
        const ProblemInstance inst = random_instance(tsp, 4, 17);
        const auto back = parse_instance_text(write_instance_text(inst),
                                              InstanceFormat::matrix);
        if (tsp) {
            CHECK(std::get<TspInstance>(inst).d == std::get<TspInstance>(back).d);
        } else {
            CHECK(std::get<QapInstance>(inst).b == std::get<QapInstance>(back).b);
            CHECK(std::get<QapInstance>(inst).c == std::get<QapInstance>(back).c);
        }
    }
}

TEST_CASE("file round trip preserves matrices") {
    const auto path = std::filesystem::temp_directory_path() / "copq_roundtrip.txt";
    const ProblemInstance inst = random_instance(true, 5, 23);
    write_instance(inst, path.string());
    const auto back = parse_instance(path.string(), InstanceFormat::matrix);
    CHECK(std::get<TspInstance>(inst).d == std::get<TspInstance>(back).d);
    std::filesystem::remove(path);
}

TEST_CASE("malformed files report the offending position") {
    try {
        parse_instance_text("3\n0 1 1\n1 zz 1\n1 1 0\n", InstanceFormat::matrix);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("truncated files produce no partial instance") {
    CHECK_THROWS_AS(parse_instance_text("3\n0 1 1\n1 0 1\n", InstanceFormat::matrix),
                    ParseError);
    CHECK_THROWS_AS(parse_instance_text("", InstanceFormat::matrix), ParseError);
}

TEST_CASE("dimension inconsistencies are validation errors") {
    CHECK_THROWS_AS(
        parse_instance_text("2\n0 1 5\n1 0\n", InstanceFormat::matrix),
        std::invalid_argument);
}

TEST_CASE("tsplib subset parses explicit full matrices") {
    const std::string text =
        "NAME : tiny\n"
        "TYPE : TSP\n"
        "COMMENT : three cities\n"
        "DIMENSION : 3\n"
        "EDGE_WEIGHT_TYPE : EXPLICIT\n"
        "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
        "EDGE_WEIGHT_SECTION\n"
        "0 2 4\n"
        "2 0 6\n"
        "4 6 0\n"
        "EOF\n";
    const auto inst = parse_instance_text(text, InstanceFormat::tsplib);
    const auto& tsp = std::get<TspInstance>(inst);
    CHECK(tsp.name == "tiny");
    CHECK(tsp.d.at(1, 2) == 6.0);
}

TEST_CASE("tsplib subset rejects unsupported layouts") {
    const std::string text =
        "DIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\nEDGE_WEIGHT_SECTION\n";
    CHECK_THROWS_AS(parse_instance_text(text, InstanceFormat::tsplib), ParseError);
}

TEST_CASE("qaplib subset parses n then two matrices") {
    const std::string text = "2\n\n0 3\n3 0\n\n0 5\n5 0\n";
    const auto inst = parse_instance_text(text, InstanceFormat::qaplib);
    const auto& qap = std::get<QapInstance>(inst);
    CHECK(qap.b.at(0, 1) == 3.0);
    CHECK(qap.c.at(1, 0) == 5.0);
    CHECK_THROWS_AS(parse_instance_text("3\n0 1\n", InstanceFormat::qaplib), ParseError);
}

TEST_CASE("format names parse") {
    CHECK(parse_format_name("matrix") == InstanceFormat::matrix);
    CHECK(parse_format_name("tsplib") == InstanceFormat::tsplib);
    CHECK(parse_format_name("qaplib") == InstanceFormat::qaplib);
    CHECK_THROWS_AS(parse_format_name("yaml"), std::invalid_argument);
}
