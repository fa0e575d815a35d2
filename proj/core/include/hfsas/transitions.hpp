#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "hfsas/constants.hpp"
#include "hfsas/zeeman.hpp"

namespace hfsas {

/// Angular coupling matrix C_{beta,alpha} for photon polarization q in
/// {-1, 0, +1}: the bare |J m_J> -> |J' m_J+q> 3-j factor contracted with
/// both eigenvector expansions, normalized so that for every excited
/// eigenstate beta, sum over alpha and q of C^2 equals 1 exactly.
/// Rows = excited eigenstates, columns = ground eigenstates.
/// Throws ConfigError if the two eigensystems are at different fields.
Eigen::MatrixXd coupling_matrix(const ZeemanEigensystem& ground,
                                const ZeemanEigensystem& excited, int q);

/// All three polarization blocks plus the total decay branching table.
struct CouplingSet {
    double field_tesla = 0;
    std::array<Eigen::MatrixXd, 3> c;   // index q+1
    Eigen::MatrixXd branching;          // sum_q C_q^2, rows normalized to 1

    const Eigen::MatrixXd& for_q(int q) const { return c[static_cast<size_t>(q + 1)]; }
};

CouplingSet coupling_set(const ZeemanEigensystem& ground,
                         const ZeemanEigensystem& excited);

/// Stable identity of one optical transition across fields: the dominant
/// character of its ground state plus the driven polarization.
struct TransitionKey {
    BasisState ground;
    int q = 0;   // +1 sigma+, -1 sigma-
    friend constexpr auto operator<=>(const TransitionKey&, const TransitionKey&) = default;
    std::string label() const;
};

struct TransitionRow {
    int alpha = 0;                    // ground eigenstate index
    int beta = 0;                     // excited eigenstate index
    int q = 0;                        // polarization, -1 or +1
    double detuning_mhz = 0;          // E_beta - E_alpha, relative to omega0
    double coupling = 0;              // C_{beta,alpha}
    BasisState ground_label;          // dominant character of alpha
    BasisState excited_label;         // dominant character of beta
    bool dominant = false;            // excited label == ground label shifted by q

    TransitionKey key() const { return TransitionKey{ground_label, q}; }
};

struct TransitionTable {
    double field_tesla = 0;
    std::vector<TransitionRow> rows;  // sorted by detuning

    /// Rows above a coupling magnitude; the dominant-character lines of the
    /// sigma+/- ladders all carry |C| >= 0.5 in the 0-2 T working range.
    std::vector<TransitionRow> strong(double min_abs_coupling = 0.5) const;
    std::vector<TransitionRow> with_q(int q) const;
    const TransitionRow* find(const TransitionKey& key) const;

    void write_csv(std::ostream& os) const;
};

/// Sigma+/- transition rows with |C| above `c_min` for both polarizations.
/// Field must lie in [0, 2] T.
TransitionTable transition_table(double field_tesla, const AtomicConstants& constants,
                                 double c_min = 1e-6);

} // namespace hfsas
