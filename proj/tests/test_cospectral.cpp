#include <string>
#include <vector>

#include "doctest.h"
#include "nbspectra/canonical.hpp"
#include "nbspectra/cospectral.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/graph.hpp"

using namespace nbspectra;

TEST_CASE("operator names parse with aliases") {
  CHECK(parse_operator("adjacency") == OperatorTag::adjacency);
  CHECK(parse_operator("A") == OperatorTag::adjacency);
  CHECK(parse_operator("adj") == OperatorTag::adjacency);
  CHECK(parse_operator("normalized-laplacian") == OperatorTag::normalized_laplacian);
  CHECK(parse_operator("normalized_laplacian") == OperatorTag::normalized_laplacian);
  CHECK(parse_operator("L") == OperatorTag::normalized_laplacian);
  CHECK(parse_operator("nb-matrix") == OperatorTag::nb_matrix);
  CHECK(parse_operator("NB-A") == OperatorTag::nb_matrix);
  CHECK(parse_operator("nb-laplacian") == OperatorTag::nb_laplacian);
  CHECK(parse_operator("nbl") == OperatorTag::nb_laplacian);
  CHECK_THROWS_AS(parse_operator("hessian"), domain_error);
  for (OperatorTag t : {OperatorTag::adjacency, OperatorTag::normalized_laplacian,
                        OperatorTag::nb_matrix, OperatorTag::nb_laplacian})
    CHECK(parse_operator(operator_name(t)) == t);
}

TEST_CASE("operator matrices have the right shape") {
  SimpleGraph k4 = complete_graph(4);
  CHECK(operator_matrix(k4, OperatorTag::adjacency).rows == 4);
  CHECK(operator_matrix(k4, OperatorTag::normalized_laplacian).rows == 4);
  CHECK(operator_matrix(k4, OperatorTag::nb_matrix).rows == 12);
  CHECK(operator_matrix(k4, OperatorTag::nb_laplacian).rows == 12);
}

TEST_CASE("the star K1,4 and C4+K1 are adjacency-cospectral but not isomorphic") {
  SimpleGraph star = star_graph(4);
  SimpleGraph c4_plus_isolated = SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(spectral_key(star, OperatorTag::adjacency) ==
        spectral_key(c4_plus_isolated, OperatorTag::adjacency));
  CHECK_FALSE(are_isomorphic(star, c4_plus_isolated));
}

TEST_CASE("scan to n=6 reproduces the collision table") {
  ScanResult r = cospectral_scan(6, 2, false, 1);
  REQUIRE(r.rows.size() == 5);  // 3, 4, 5, 6 and the 4-6 aggregate
  auto row = [&](const std::string& label) -> const ScanRow& {
    for (const ScanRow& x : r.rows)
      if (x.label == label) return x;
    REQUIRE(false);
    return r.rows.front();
  };
  CHECK(row("3").graphs == 1);
  CHECK(row("4").graphs == 3);
  CHECK(row("5").graphs == 11);
  CHECK(row("6").graphs == 62);
  CHECK(row("4-6").graphs == 76);
  for (const std::string& label : {"3", "4", "5"})
    for (long long c : row(label).in_class) CHECK(c == 0);
  CHECK(row("6").in_class == std::array<long long, 4>{0, 2, 0, 0});
  CHECK(row("4-6").in_class == std::array<long long, 4>{0, 2, 0, 0});

  // The lone normalized-Laplacian pair at n=6.
  const auto& pairs = r.witnesses.at(6)[static_cast<int>(OperatorTag::normalized_laplacian)];
  REQUIRE(pairs.size() == 1);
  SimpleGraph a = parse_graph6(pairs[0].g6_a);
  SimpleGraph b = parse_graph6(pairs[0].g6_b);
  CHECK_FALSE(are_isomorphic(a, b));
  CHECK(spectral_key(a, OperatorTag::normalized_laplacian) ==
        spectral_key(b, OperatorTag::normalized_laplacian));
  CHECK(spectral_key(a, OperatorTag::adjacency) != spectral_key(b, OperatorTag::adjacency));
  CHECK(spectral_key(a, OperatorTag::nb_matrix) != spectral_key(b, OperatorTag::nb_matrix));
  CHECK(spectral_key(a, OperatorTag::nb_laplacian) != spectral_key(b, OperatorTag::nb_laplacian));
}

TEST_CASE("scan results are thread-count independent") {
  ScanResult one = cospectral_scan(5, 2, false, 1);
  ScanResult two = cospectral_scan(5, 2, false, 4);
  CHECK(scan_csv(one) == scan_csv(two));
}

TEST_CASE("scan CSV format") {
  ScanResult r = cospectral_scan(4, 2, false, 1);
  std::string csv = scan_csv(r);
  CHECK(csv.rfind("n,graphs,A,L,NB_A,NB_L\n", 0) == 0);
  CHECK(csv.find("4,3,0,0,0,0\n") != std::string::npos);
}

TEST_CASE("scan capability limits") {
  CHECK_THROWS_AS(cospectral_scan(9, 2, true, 1), capability_error);
  CHECK_THROWS_AS(cospectral_scan(8, 2, false, 1), capability_error);
  CHECK_THROWS_AS(cospectral_scan(2, 2, false, 1), domain_error);
  CHECK_THROWS_AS(cospectral_scan(6, 1, false, 1), domain_error);
}
