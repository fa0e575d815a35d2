#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hfsas/constants.hpp"
#include "hfsas/half_int.hpp"

namespace hfsas {

/// One |m_I, m_J> product-basis state.
struct BasisState {
    HalfInt mi;
    HalfInt mj;
    HalfInt mf() const { return mi + mj; }
    friend constexpr auto operator<=>(const BasisState&, const BasisState&) = default;
    std::string label() const { return mi.signed_str() + "," + mj.signed_str(); }
};

/// Ordered |m_I, m_J> basis for given I, J (m_I outer, m_J inner, ascending).
std::vector<BasisState> product_basis(HalfInt nuclear_spin, HalfInt j);

/// H_hfs + H_B of one manifold, in MHz, relative to the manifold's zero-field
/// centre of gravity, in the product basis above. H_hfs = A I.J for the
/// ground manifold plus the standard B-coefficient quadrupole term for the
/// excited one; H_B = (mu_B/h) (g_J J_z + g_I I_z) B.
Eigen::MatrixXd build_hamiltonian(Manifold manifold, double field_tesla,
                                  const AtomicConstants& constants);

/// Eigensystem of one manifold at a fixed field. Eigenstates are ordered by
/// the product-basis index of their dominant |m_I, m_J> component (ties at
/// avoided crossings broken toward lower m_J), which keeps state identity
/// stable across fields in the Paschen-Back range.
struct ZeemanEigensystem {
    Manifold manifold = Manifold::ground;
    double field_tesla = 0;
    std::vector<BasisState> basis;        // product-basis order
    std::vector<double> energies_mhz;     // per eigenstate
    Eigen::MatrixXd vectors;              // column i = eigenstate i over basis
    std::vector<int> dominant;            // basis index of dominant component

    int dim() const { return static_cast<int>(basis.size()); }
    /// Index of the eigenstate labeled by `state`, or -1 if no eigenstate has
    /// that dominant character.
    int index_of(BasisState state) const;
};

/// Block diagonalization over m_F = m_I + m_J. Throws ComputeError if H is
/// not Hermitian to 1e-10 (relative to its norm) or inconsistent with the
/// basis dimension.
ZeemanEigensystem diagonalize(const Eigen::MatrixXd& hamiltonian_mhz,
                              HalfInt nuclear_spin, HalfInt j);

/// build_hamiltonian + diagonalize with manifold/field metadata filled in.
ZeemanEigensystem eigensystem(Manifold manifold, double field_tesla,
                              const AtomicConstants& constants);

} // namespace hfsas
