#ifndef HSC_ZOO_HPP
#define HSC_ZOO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsc/bialgebra.hpp"

namespace hsc {

// Group algebra k[G] from an explicit multiplication table: table[i][j] is
// the index of the product of elements i and j, identity at index 0. The
// table is validated (identity, associativity, inverses) before building.
HopfAlgebra group_algebra(const FieldSpec& F, const std::string& name,
                          const std::vector<std::string>& labels,
                          const std::vector<std::vector<uint32_t>>& table);

// Cyclic group of order n with labels e, g, g2, ...
HopfAlgebra cyclic_group_algebra(const FieldSpec& F, const std::string& name, uint32_t n);

// Symmetric group on three letters, generated by the transpositions
// a = (12), b = (23); basis order e, a, b, ab, ba, aba.
HopfAlgebra symmetric3_algebra(const FieldSpec& F, const std::string& name);

// The 4-dimensional algebra with basis {1, g, x, gx}, g^2 = 1, x^2 = 0,
// xg = -gx, comultiplication determined by g grouplike and
// Delta(x) = x (x) 1 + g (x) x. Requires characteristic != 2.
HopfAlgebra sweedler_hopf(const FieldSpec& F);

// Dimension n^2 algebra over GF(p) with basis g^i x^j at index i*n + j,
// g^n = 1, x^n = 0, xg = omega*gx for a primitive n-th root of unity omega.
HopfAlgebra taft_hopf(uint32_t n, const FieldSpec& F, int64_t omega);

// The one-dimensional bialgebra (tensor unit).
Bialgebra unit_bialgebra(const FieldSpec& F);

// Basis {1, t} with t grouplike and t^2 = t: a genuine bialgebra with no
// antipode (S(t)t = 1 has no solution).
Bialgebra nonhopf_idempotent(const FieldSpec& F);

// Basis {1, t} with t marked grouplike but t^2 = 0. Not a bialgebra at all
// (eps_mult fails); compute_antipode still reports no solution. Kept as a
// solver test input.
Bialgebra nonhopf_nilpotent(const FieldSpec& F);

// Built-in example algebras, in registry order.
std::vector<std::string> zoo_names();
HopfAlgebra zoo(const std::string& name);

}  // namespace hsc

#endif
