#include "hfsas/zeeman.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hfsas/errors.hpp"

namespace hfsas {

std::vector<BasisState> product_basis(HalfInt nuclear_spin, HalfInt j) {
    std::vector<BasisState> basis;
    basis.reserve(static_cast<size_t>((nuclear_spin.twice + 1) * (j.twice + 1)));
    for (int mi = -nuclear_spin.twice; mi <= nuclear_spin.twice; mi += 2)
        for (int mj = -j.twice; mj <= j.twice; mj += 2)
            basis.push_back({half(mi), half(mj)});
    return basis;
}

namespace {

// Angular-momentum matrices in the |m> basis (ascending m), dimension 2j+1.
struct AngularOps {
    Eigen::MatrixXd jz, jp, jm;
};

AngularOps angular_ops(HalfInt j) {
    const int dim = j.twice + 1;
    AngularOps ops;
    ops.jz = Eigen::MatrixXd::Zero(dim, dim);
    ops.jp = Eigen::MatrixXd::Zero(dim, dim);
    const double jj = j.value() * (j.value() + 1.0);
    for (int i = 0; i < dim; ++i) {
        const double m = -j.value() + i;
        ops.jz(i, i) = m;
        if (i + 1 < dim) ops.jp(i + 1, i) = std::sqrt(jj - m * (m + 1.0));
    }
    ops.jm = ops.jp.transpose();
    return ops;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

Eigen::MatrixXd build_hamiltonian(Manifold manifold, double field_tesla,
                                  const AtomicConstants& constants) {
    if (field_tesla < 0)
        throw ConfigError("build_hamiltonian: negative field (Faraday geometry fixes B >= 0)");

    const HalfInt I = constants.nuclear_spin;
    const HalfInt J = constants.j(manifold);
    const int dim = constants.manifold_dim(manifold);

    const AngularOps iops = angular_ops(I);
    const AngularOps jops = angular_ops(J);
    const Eigen::MatrixXd id_i = Eigen::MatrixXd::Identity(I.twice + 1, I.twice + 1);
    const Eigen::MatrixXd id_j = Eigen::MatrixXd::Identity(J.twice + 1, J.twice + 1);

    const Eigen::MatrixXd idotj = kron(iops.jz, jops.jz) +
                                  0.5 * (kron(iops.jp, jops.jm) + kron(iops.jm, jops.jp));

    const double a = manifold == Manifold::ground ? constants.a_hfs_ground_mhz
                                                  : constants.a_hfs_excited_mhz;
    Eigen::MatrixXd h = a * idotj;

    if (manifold == Manifold::excited && constants.b_hfs_excited_mhz != 0.0) {
        const double iv = I.value(), jv = J.value();
        const double denom = 2.0 * iv * (2.0 * iv - 1.0) * jv * (2.0 * jv - 1.0);
        if (denom != 0.0) {
            h += constants.b_hfs_excited_mhz *
                 (3.0 * (idotj * idotj) + 1.5 * idotj -
                  iv * (iv + 1.0) * jv * (jv + 1.0) * Eigen::MatrixXd::Identity(dim, dim)) /
                 denom;
        }
    }

    const double g_j = manifold == Manifold::ground ? constants.g_j_ground
                                                    : constants.g_j_excited;
    h += constants.bohr_magneton_mhz_per_t * field_tesla *
         (g_j * kron(id_i, jops.jz) + constants.g_i * kron(iops.jz, id_j));
    return h;
}

int ZeemanEigensystem::index_of(BasisState state) const {
    int found = -1;
    for (int i = 0; i < dim(); ++i) {
        if (basis[static_cast<size_t>(dominant[static_cast<size_t>(i)])] == state) {
            if (found >= 0) return -1;  // ambiguous labeling
            found = i;
        }
    }
    return found;
}

ZeemanEigensystem diagonalize(const Eigen::MatrixXd& hamiltonian_mhz,
                              HalfInt nuclear_spin, HalfInt j) {
    const auto basis = product_basis(nuclear_spin, j);
    const int dim = static_cast<int>(basis.size());
    if (hamiltonian_mhz.rows() != dim || hamiltonian_mhz.cols() != dim)
        throw ComputeError("diagonalize: matrix dimension " + std::to_string(hamiltonian_mhz.rows()) +
                           " does not match basis size " + std::to_string(dim));

    const double scale = std::max(1.0, hamiltonian_mhz.cwiseAbs().maxCoeff());
    if ((hamiltonian_mhz - hamiltonian_mhz.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw ComputeError("diagonalize: input matrix is not Hermitian");

    // Group basis indices by m_F; the Hamiltonian is block diagonal there.
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < dim; ++i) blocks[basis[static_cast<size_t>(i)].mf().twice].push_back(i);

    struct Eig {
        double energy;
        Eigen::VectorXd vec;
        int dominant;
    };
    std::vector<Eig> eigs;
    eigs.reserve(static_cast<size_t>(dim));

    for (const auto& [mf, idx] : blocks) {
        const int n = static_cast<int>(idx.size());
        Eigen::MatrixXd sub(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                sub(r, c) = hamiltonian_mhz(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
        if (solver.info() != Eigen::Success)
            throw ComputeError("diagonalize: eigensolver failed on m_F block " + std::to_string(mf));
        for (int k = 0; k < n; ++k) {  // ascending energies within the block
            Eigen::VectorXd full = Eigen::VectorXd::Zero(dim);
            for (int r = 0; r < n; ++r) full(idx[static_cast<size_t>(r)]) = solver.eigenvectors()(r, k);
            // dominant component; ties broken toward lower m_J (smaller basis
            // index within a block is lower m_J for equal m_I ordering)
            int best = idx[0];
            double best_amp = -1.0;
            for (int r = 0; r < n; ++r) {
                const double amp = std::abs(full(idx[static_cast<size_t>(r)]));
                if (amp > best_amp + 1e-12) {
                    best_amp = amp;
                    best = idx[static_cast<size_t>(r)];
                }
            }
            eigs.push_back({solver.eigenvalues()(k), std::move(full), best});
        }
    }

    // Global ordering by dominant character (energy as deterministic tie-break).
    std::stable_sort(eigs.begin(), eigs.end(), [](const Eig& a, const Eig& b) {
        if (a.dominant != b.dominant) return a.dominant < b.dominant;
        return a.energy < b.energy;
    });

    ZeemanEigensystem sys;
    sys.basis = basis;
    sys.energies_mhz.resize(static_cast<size_t>(dim));
    sys.vectors.resize(dim, dim);
    sys.dominant.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        sys.energies_mhz[static_cast<size_t>(i)] = eigs[static_cast<size_t>(i)].energy;
        sys.vectors.col(i) = eigs[static_cast<size_t>(i)].vec;
        sys.dominant[static_cast<size_t>(i)] = eigs[static_cast<size_t>(i)].dominant;
    }
    return sys;
}

ZeemanEigensystem eigensystem(Manifold manifold, double field_tesla,
                              const AtomicConstants& constants) {
    ZeemanEigensystem sys = diagonalize(build_hamiltonian(manifold, field_tesla, constants),
                                        constants.nuclear_spin, constants.j(manifold));
    sys.manifold = manifold;
    sys.field_tesla = field_tesla;
    return sys;
}

} // namespace hfsas
