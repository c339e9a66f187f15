#pragma once

#include <cstdint>

#include "zsalg/group.hpp"

namespace zsalg {

// Groups built from normal forms. Element 0 is the identity; the index
// layouts are documented per constructor so tests can name elements.

/// C_n as a^i, index i.
GroupPtr cyclic(std::uint32_t n);

/// (C_p)^k, index = base-p digits (generator j is p^j).
GroupPtr elementary_abelian(std::uint32_t p, unsigned k);

/// p_+^{1+2}, p odd: a^i b^j c^k at index i + p*j + p^2*k with
/// a^p = b^p = c^p = 1, c central and [b, a] = c.
GroupPtr extraspecial_plus(std::uint32_t p);

/// p_-^{1+2}, p odd: a^i b^j at index i + p*j (0 <= j < p^2) with
/// a^p = b^{p^2} = 1, b^a = b^{1+p}. The generator named c is b^p.
GroupPtr extraspecial_minus(std::uint32_t p);

/// Dihedral group of order n (n even): r^i s^e at index i + (n/2)*e.
GroupPtr dihedral(std::uint32_t n);

/// Generalized quaternion group of order n (4 | n, n >= 8):
/// r^{n/2} = 1, s^2 = r^{n/4}, s^-1 r s = r^-1.
GroupPtr quaternion(std::uint32_t n);

/// Semidihedral group of order n = 2^k >= 16: r^{n/2} = s^2 = 1,
/// s r s = r^{n/4 - 1}.
GroupPtr semidihedral(std::uint32_t n);

/// A x B at index a + |A|*b. Generator names from B get a trailing "'"
/// when they collide with names from A.
GroupPtr direct_product(const Group& a, const Group& b);

}  // namespace zsalg
