#include "czlattice/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "czlattice/lattice.hpp"

namespace czlattice {

std::vector<double> spectrum(const CMatrix& H) {
    int n = H.size();
    if (n == 0) throw SizeTooSmall("spectrum of empty matrix");
    double scale = std::max(1.0, H.max_norm());
    if (H.hermiticity_defect() > 1e-12 * scale)
        throw NotHermitian("matrix deviates from its adjoint by more than 1e-12");

    Eigen::MatrixXcd M(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M(r, c) = H(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error("eigensolver failed to converge");

    std::vector<double> out((size_t(n)));
    for (int i = 0; i < n; ++i) out[size_t(i)] = es.eigenvalues()[i];
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<ButterflyRow> sweep_one(int P, int Q) {
    HamiltonianSpec spec{FluxRatio(P, Q)};
    std::vector<double> ev = spectrum(build_hamiltonian(spec));
    std::vector<ButterflyRow> rows;
    rows.reserve(ev.size());
    for (size_t i = 0; i < ev.size(); ++i) rows.push_back({P, Q, (int)i, ev[i]});
    return rows;
}

} // namespace

std::vector<ButterflyRow> butterfly_sweep(int Qmax, int jobs) {
    if (Qmax < 2) throw Error("butterfly_sweep needs Qmax >= 2");
    std::vector<std::pair<int, int>> items; // (Q, P), already in output order
    for (int Q = 2; Q <= Qmax; ++Q)
        for (int P = 1; P < Q; ++P)
            if (std::gcd(P, Q) == 1) items.emplace_back(Q, P);

    std::vector<std::vector<ButterflyRow>> parts(items.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i)
            parts[i] = sweep_one(items[i].second, items[i].first);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                parts[i] = sweep_one(items[i].second, items[i].first);
        };
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(jobs, (int)items.size());
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<ButterflyRow> rows;
    for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

namespace {

// Shortest decimal that round-trips to the same double.
std::string shortest_double(double v) {
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[40];
        auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, prec);
        std::string s(buf, res.ptr);
        double back;
        std::from_chars(s.data(), s.data() + s.size(), back);
        if (back == v) return s;
    }
    return std::to_string(v);
}

} // namespace

void write_butterfly_csv(std::ostream& os, const std::vector<ButterflyRow>& rows) {
    os << "phi_num,phi_den,index,energy\n";
    for (const auto& r : rows)
        os << r.phi_num << ',' << r.phi_den << ',' << r.index << ','
           << shortest_double(r.energy) << '\n';
}

} // namespace czlattice
