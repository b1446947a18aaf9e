#include "amco/proprioception/pca.hpp"

#include <Eigen/Eigenvalues>
#include <fstream>
#include <sstream>

namespace amco {

PcaModel fit_pca(const std::vector<RawSignal>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 3) throw Error("fit_pca: need at least 3 samples");

    RawSignal mean = RawSignal::Zero();
    for (const auto& s : samples) mean += s;
    mean /= static_cast<double>(n);

    Eigen::Matrix<double, kSignalDim, kSignalDim> cov;
    cov.setZero();
    for (const auto& s : samples) {
        RawSignal d = s - mean;
        cov.noalias() += d * d.transpose();
    }
    cov /= static_cast<double>(n - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, kSignalDim, kSignalDim>>
        solver(cov);
    if (solver.info() != Eigen::Success)
        throw Error("fit_pca: eigendecomposition failed");

    // Eigen returns eigenvalues ascending; take the top two.
    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();
    const double l1 = evals(kSignalDim - 1);
    const double l2 = evals(kSignalDim - 2);
    if (l2 <= 1e-12 || l2 <= 1e-12 * l1)
        throw Error("fit_pca: degenerate data (sample covariance rank < 2)");

    PcaModel model;
    model.mean = mean;
    model.eigenvalues << l1, l2;
    model.components.row(0) = evecs.col(kSignalDim - 1).transpose();
    model.components.row(1) = evecs.col(kSignalDim - 2).transpose();

    // Sign convention: first non-negligible entry of each component >= 0.
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < kSignalDim; ++c) {
            const double v = model.components(r, c);
            if (std::abs(v) > 1e-12) {
                if (v < 0) model.components.row(r) = -model.components.row(r);
                break;
            }
        }
    }
    return model;
}

PcaPoint project(const PcaModel& model, const RawSignal& s) {
    return model.components * (s - model.mean);
}

void PcaModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out.precision(17);
    out << "# pca model: dim mean components eigenvalues\n";
    out << kSignalDim << "\n";
    for (int i = 0; i < kSignalDim; ++i) out << mean(i) << (i + 1 < kSignalDim ? ' ' : '\n');
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < kSignalDim; ++i)
            out << components(r, i) << (i + 1 < kSignalDim ? ' ' : '\n');
    out << eigenvalues(0) << ' ' << eigenvalues(1) << '\n';
    if (!out) throw Error("write failed: " + path);
}

PcaModel PcaModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open pca model: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') break;
    }
    int dim = 0;
    std::istringstream(line) >> dim;
    if (dim != kSignalDim)
        throw Error("pca model dimension mismatch in " + path);
    PcaModel m;
    for (int i = 0; i < kSignalDim; ++i) in >> m.mean(i);
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < kSignalDim; ++i) in >> m.components(r, i);
    in >> m.eigenvalues(0) >> m.eigenvalues(1);
    if (!in) throw Error("malformed pca model file: " + path);
    return m;
}

}  // namespace amco
