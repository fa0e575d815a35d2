#include "hfsas/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hfsas/errors.hpp"
#include "hfsas/wigner.hpp"

namespace hfsas {

namespace {

// Bare |J m_J> -> |J' m_J + q> angular factor:
//   c_q = sqrt(2J'+1) (-1)^(J'-m') 3j(J' 1 J; -m' q m),
// normalized so the decay branching of every excited m' sums to 1 over all
// (m, q) channels.
double bare_factor(HalfInt j_g, HalfInt j_e, HalfInt mj_g, int q) {
    const HalfInt mj_e = mj_g + half(2 * q);
    if (std::abs(mj_e.twice) > j_e.twice) return 0.0;
    const double threej = wigner_3j(j_e, half(2), j_g, -mj_e, half(2 * q), mj_g);
    const int phase_twice = j_e.twice - mj_e.twice;   // even
    const double phase = (phase_twice / 2) % 2 == 0 ? 1.0 : -1.0;
    return std::sqrt(static_cast<double>(j_e.twice + 1)) * phase * threej;
}

} // namespace

Eigen::MatrixXd coupling_matrix(const ZeemanEigensystem& ground,
                                const ZeemanEigensystem& excited, int q) {
    if (ground.field_tesla != excited.field_tesla)
        throw ConfigError("coupling_matrix: manifolds evaluated at different fields (" +
                          std::to_string(ground.field_tesla) + " vs " +
                          std::to_string(excited.field_tesla) + " T)");
    if (q < -1 || q > 1)
        throw ConfigError("coupling_matrix: polarization q must be -1, 0 or +1");

    const int ng = ground.dim();
    const int ne = excited.dim();
    // Bare matrix in the product basis: rows excited, cols ground. Nonzero
    // only for Delta m_J = q, Delta m_I = 0.
    Eigen::MatrixXd bare = Eigen::MatrixXd::Zero(ne, ng);
    for (int a = 0; a < ng; ++a) {
        const BasisState g = ground.basis[static_cast<size_t>(a)];
        const BasisState target{g.mi, g.mj + half(2 * q)};
        for (int b = 0; b < ne; ++b) {
            if (excited.basis[static_cast<size_t>(b)] == target) {
                // J from basis extents: max |m_J| equals J
                bare(b, a) = bare_factor(half(std::abs(ground.basis.back().mj.twice)),
                                         half(std::abs(excited.basis.back().mj.twice)),
                                         g.mj, q);
            }
        }
    }
    return excited.vectors.transpose() * bare * ground.vectors;
}

CouplingSet coupling_set(const ZeemanEigensystem& ground, const ZeemanEigensystem& excited) {
    CouplingSet set;
    set.field_tesla = ground.field_tesla;
    for (int q = -1; q <= 1; ++q)
        set.c[static_cast<size_t>(q + 1)] = coupling_matrix(ground, excited, q);

    const int ne = excited.dim();
    const int ng = ground.dim();
    set.branching = Eigen::MatrixXd::Zero(ne, ng);
    for (const auto& m : set.c) set.branching += m.cwiseProduct(m);
    // Row sums are 1 analytically; renormalize so trace conservation holds to
    // floating-point rounding in the Bloch equations.
    for (int b = 0; b < ne; ++b) {
        const double s = set.branching.row(b).sum();
        if (std::abs(s - 1.0) > 1e-8)
            throw ComputeError("coupling_set: branching row " + std::to_string(b) +
                               " sums to " + std::to_string(s));
        set.branching.row(b) /= s;
    }
    return set;
}

std::string TransitionKey::label() const {
    return std::string(q > 0 ? "sigma+" : "sigma-") + "|" + ground.label() + ">";
}

std::vector<TransitionRow> TransitionTable::strong(double min_abs_coupling) const {
    std::vector<TransitionRow> out;
    for (const auto& r : rows)
        if (std::abs(r.coupling) >= min_abs_coupling) out.push_back(r);
    return out;
}

std::vector<TransitionRow> TransitionTable::with_q(int q) const {
    std::vector<TransitionRow> out;
    for (const auto& r : rows)
        if (r.q == q) out.push_back(r);
    return out;
}

const TransitionRow* TransitionTable::find(const TransitionKey& key) const {
    for (const auto& r : rows)
        if (r.dominant && r.q == key.q && r.ground_label == key.ground) return &r;
    return nullptr;
}

void TransitionTable::write_csv(std::ostream& os) const {
    os << "index,polarization,detuning_MHz,coupling,ground_label,excited_label\n";
    int i = 0;
    for (const auto& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%s,%.6f,%.9f,%s,%s\n", i++,
                      r.q > 0 ? "sigma+" : "sigma-", r.detuning_mhz, r.coupling,
                      r.ground_label.label().c_str(), r.excited_label.label().c_str());
        os << buf;
    }
}

TransitionTable transition_table(double field_tesla, const AtomicConstants& constants,
                                 double c_min) {
    if (field_tesla < 0.0 || field_tesla > 2.0)
        throw ConfigError("transition_table: field " + std::to_string(field_tesla) +
                          " T outside supported range [0, 2] T");

    const ZeemanEigensystem g = eigensystem(Manifold::ground, field_tesla, constants);
    const ZeemanEigensystem e = eigensystem(Manifold::excited, field_tesla, constants);

    TransitionTable table;
    table.field_tesla = field_tesla;
    for (int q = -1; q <= 1; q += 2) {
        const Eigen::MatrixXd c = coupling_matrix(g, e, q);
        for (int a = 0; a < g.dim(); ++a) {
            const BasisState gl = g.basis[static_cast<size_t>(g.dominant[static_cast<size_t>(a)])];
            for (int b = 0; b < e.dim(); ++b) {
                if (std::abs(c(b, a)) <= c_min) continue;
                const BasisState el = e.basis[static_cast<size_t>(e.dominant[static_cast<size_t>(b)])];
                TransitionRow row;
                row.alpha = a;
                row.beta = b;
                row.q = q;
                row.detuning_mhz = e.energies_mhz[static_cast<size_t>(b)] -
                                   g.energies_mhz[static_cast<size_t>(a)];
                row.coupling = c(b, a);
                row.ground_label = gl;
                row.excited_label = el;
                row.dominant = (el.mi == gl.mi) && (el.mj == gl.mj + half(2 * q));
                table.rows.push_back(row);
            }
        }
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const TransitionRow& a, const TransitionRow& b) {
                  return a.detuning_mhz < b.detuning_mhz;
              });
    return table;
}

} // namespace hfsas
