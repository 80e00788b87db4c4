#pragma once

#include <string>
#include <vector>

#include "mtcat/category_data.hpp"

namespace mtcat {

enum class Family { trivial, pointed_zn, fibonacci, ising, su2_level };

/// Which catalog entry to build.
///   pointed_zn: labels Z_n, quadratic form exp(pi i q a^2 / n); needs n >= 1,
///               0 <= q < 2n and q*n even.
///   su2_level:  0 <= level <= 12.
struct CatalogSpec {
    Family family = Family::trivial;
    int n = 1;
    int q = 0;
    int level = 0;
};

Family parse_family(const std::string& name);
const char* to_string(Family f);

/// Builds complete data with explicit unit F-matrices, weights and central charge.
/// Throws InputError for unsupported parameters.
CategoryData generate(const CatalogSpec& spec);

/// Specs covering the desk-scale catalog: trivial, pointed Z_n for n <= 6 with
/// every admissible form, fibonacci, ising and su2 up to `max_level`.
std::vector<CatalogSpec> catalog_specs(int max_level = 8, int max_n = 6);

namespace su2 {

/// Labels are twice-spins 0..k.
bool admissible(int level, int a, int b, int c);

/// Quantum integer [n] = sin(n pi/(k+2)) / sin(pi/(k+2)), exactly 0 when k+2 divides n.
Scalar quantum_integer(int level, int n);

/// Racah-Wigner q-6j symbol {j1 j2 j12; j3 j j23} at q = exp(pi i/(k+2)), all
/// arguments as twice-spins. Throws InputError for an inadmissible triad.
Scalar q_racah_6j(int level, int j1, int j2, int j12, int j3, int j, int j23);

/// Fusing-matrix entry for (ab)c channel x and a(bc) channel y, built from
/// q_racah_6j and normalized so every F-matrix is real orthogonal.
Scalar fusing_entry(int level, int a, int b, int c, int d, int x, int y);

}  // namespace su2

}  // namespace mtcat
