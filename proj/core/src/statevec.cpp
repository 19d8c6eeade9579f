// Copyright 2026 The sloccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sloccsim/statevec.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace sloccsim {

namespace {
const cplx kI{0.0, 1.0};

void check_site(int site, int n) {
    if (site < 1 || site > n) {
        throw std::out_of_range("site index " + std::to_string(site) + " outside 1.." +
                                std::to_string(n));
    }
}
}  // namespace

LatticeSpec LatticeSpec::chain(int n) {
    LatticeSpec s;
    s.topology = Topology::Chain;
    s.n1 = n;
    return s;
}

LatticeSpec LatticeSpec::ring(int n) {
    LatticeSpec s;
    s.topology = Topology::Ring;
    s.n1 = n;
    return s;
}

LatticeSpec LatticeSpec::grid(int rows, int cols) {
    LatticeSpec s;
    s.topology = Topology::Grid;
    s.n1 = rows;
    s.n2 = cols;
    return s;
}

LatticeSpec LatticeSpec::cubic(int lx, int ly, int lz) {
    LatticeSpec s;
    s.topology = Topology::Cubic;
    s.n1 = lx;
    s.n2 = ly;
    s.n3 = lz;
    return s;
}

LatticeSpec LatticeSpec::custom(int n, std::vector<std::pair<int, int>> edges) {
    LatticeSpec s;
    s.topology = Topology::Custom;
    s.n1 = n;
    for (auto &[a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("custom lattice: self-loop");
        }
        if (a > b) {
            std::swap(a, b);
        }
    }
    s.custom_edges = std::move(edges);
    return s;
}

int LatticeSpec::num_sites() const {
    switch (topology) {
        case Topology::Chain:
        case Topology::Ring:
        case Topology::Custom:
            return n1;
        case Topology::Grid:
            return n1 * n2;
        case Topology::Cubic:
            return n1 * n2 * n3;
    }
    return 0;
}

int LatticeSpec::grid_site(int row, int col) const { return (row - 1) * n2 + col; }

int LatticeSpec::cubic_site(int x, int y, int z) const {
    return ((z - 1) * n2 + (y - 1)) * n1 + x;
}

std::vector<std::pair<int, int>> LatticeSpec::edges() const {
    std::vector<std::pair<int, int>> out;
    switch (topology) {
        case Topology::Custom:
            return custom_edges;
        case Topology::Chain:
            for (int i = 1; i < n1; ++i) {
                out.emplace_back(i, i + 1);
            }
            break;
        case Topology::Ring:
            for (int i = 1; i < n1; ++i) {
                out.emplace_back(i, i + 1);
            }
            if (n1 > 2) {
                out.emplace_back(1, n1);
            }
            break;
        case Topology::Grid:
            for (int r = 1; r <= n1; ++r) {
                for (int c = 1; c <= n2; ++c) {
                    if (c < n2) {
                        out.emplace_back(grid_site(r, c), grid_site(r, c + 1));
                    }
                    if (r < n1) {
                        out.emplace_back(grid_site(r, c), grid_site(r + 1, c));
                    }
                }
            }
            break;
        case Topology::Cubic:
            for (int z = 1; z <= n3; ++z) {
                for (int y = 1; y <= n2; ++y) {
                    for (int x = 1; x <= n1; ++x) {
                        if (x < n1) {
                            out.emplace_back(cubic_site(x, y, z), cubic_site(x + 1, y, z));
                        }
                        if (y < n2) {
                            out.emplace_back(cubic_site(x, y, z), cubic_site(x, y + 1, z));
                        }
                        if (z < n3) {
                            out.emplace_back(cubic_site(x, y, z), cubic_site(x, y, z + 1));
                        }
                    }
                }
            }
            break;
    }
    return out;
}

std::vector<int> LatticeSpec::neighbors(int site) const {
    std::vector<int> out;
    for (auto [a, b] : edges()) {
        if (a == site) {
            out.push_back(b);
        } else if (b == site) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PureState::PureState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (amps_.size() != (uint64_t{1} << n_)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
}

PureState PureState::product_plus(int n) {
    PureState s;
    s.n_ = n;
    double a = std::pow(2.0, -0.5 * n);
    s.amps_.assign(uint64_t{1} << n, cplx{a, 0.0});
    return s;
}

PureState PureState::basis_state(int n, uint64_t index) {
    PureState s;
    s.n_ = n;
    s.amps_.assign(uint64_t{1} << n, cplx{0.0, 0.0});
    s.amps_[index] = 1.0;
    return s;
}

void PureState::apply_1q(int site, const Mat2 &m) {
    check_site(site, n_);
    int b = n_ - site;
    uint64_t stride = uint64_t{1} << b;
    for (uint64_t base = 0; base < dim(); base += 2 * stride) {
        for (uint64_t low = 0; low < stride; ++low) {
            uint64_t i0 = base + low;
            uint64_t i1 = i0 + stride;
            cplx a0 = amps_[i0], a1 = amps_[i1];
            amps_[i0] = m(0, 0) * a0 + m(0, 1) * a1;
            amps_[i1] = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }
}

void PureState::apply_cz(int a, int b) {
    check_site(a, n_);
    check_site(b, n_);
    for (uint64_t i = 0; i < dim(); ++i) {
        if (bit_of(i, a) && bit_of(i, b)) {
            amps_[i] = -amps_[i];
        }
    }
}

void PureState::apply_cp(int a, int b, double phi) {
    check_site(a, n_);
    check_site(b, n_);
    if (phi == M_PI) {
        apply_cz(a, b);
        return;
    }
    cplx w = std::exp(kI * phi);
    for (uint64_t i = 0; i < dim(); ++i) {
        if (bit_of(i, a) && bit_of(i, b)) {
            amps_[i] *= w;
        }
    }
}

void PureState::apply_pauli(int site, Pauli p) {
    if (p == Pauli::I) {
        return;
    }
    apply_1q(site, pauli_matrix(p));
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void PureState::normalize() {
    double n = std::sqrt(norm_sq());
    if (n == 0.0) {
        throw ZeroProbabilityBranch("cannot normalize a zero state");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

cplx PureState::inner(const PureState &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("inner: qubit counts differ");
    }
    cplx s{0.0, 0.0};
    for (uint64_t i = 0; i < dim(); ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

MeasurementBasis MeasurementBasis::from_vectors(const Vec2 &a, const Vec2 &b) {
    MeasurementBasis out;
    out.m0 = a.normalized();
    out.m1 = b.normalized();
    if (std::abs(out.m0.dot(out.m1)) > 1e-12) {
        throw SingularInput("measurement basis vectors are not orthogonal");
    }
    return out;
}

MeasurementBasis MeasurementBasis::bloch(double xi, double phi) {
    double c = std::cos(xi / 2.0), s = std::sin(xi / 2.0);
    Vec2 plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    Vec2 minus{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
    cplx w = -kI * std::exp(kI * phi);
    MeasurementBasis out = from_vectors(c * plus + (w * s) * minus,
                                        (-std::conj(w) * s) * plus + cplx(c) * minus);
    out.xi = xi;
    out.phi = phi;
    return out;
}

MeasurementBasis MeasurementBasis::computational() {
    return from_vectors({1.0, 0.0}, {0.0, 1.0});
}

MeasurementBasis MeasurementBasis::pauli_y_eigenbasis() {
    double s = 1.0 / std::sqrt(2.0);
    return from_vectors({s, kI * s}, {s, -kI * s});
}

MeasurementBasis MeasurementBasis::rotated(const Mat2 &u) const {
    MeasurementBasis out = from_vectors(u * m0, u * m1);
    return out;
}

PureState project_site(const PureState &state, int site, const Vec2 &bra) {
    check_site(site, state.n());
    int b = state.n() - site;
    uint64_t stride = uint64_t{1} << b;
    uint64_t new_dim = state.dim() >> 1;
    std::vector<cplx> out(new_dim);
    cplx c0 = std::conj(bra.x), c1 = std::conj(bra.y);
    for (uint64_t k = 0; k < new_dim; ++k) {
        uint64_t low = k & (stride - 1);
        uint64_t high = k >> b;
        uint64_t i0 = (high << (b + 1)) | low;
        out[k] = c0 * state.amp(i0) + c1 * state.amp(i0 | stride);
    }
    return PureState(state.n() - 1, std::move(out));
}

namespace {
MeasureResult finish_measure(const PureState &state, int site, const MeasurementBasis &basis,
                             int outcome, double total) {
    PureState post = project_site(state, site, outcome == 0 ? basis.m0 : basis.m1);
    double p = post.norm_sq() / total;
    MeasureResult r;
    r.outcome = outcome;
    r.prob = p;
    post.normalize();
    r.post = std::move(post);
    return r;
}
}  // namespace

MeasureResult measure_sampled(const PureState &state, int site, const MeasurementBasis &basis,
                              Rng &rng) {
    double total = state.norm_sq();
    PureState branch0 = project_site(state, site, basis.m0);
    double p0 = branch0.norm_sq() / total;
    int outcome = rng.uniform() < p0 ? 0 : 1;
    if (outcome == 0) {
        MeasureResult r;
        r.outcome = 0;
        r.prob = p0;
        branch0.normalize();
        r.post = std::move(branch0);
        return r;
    }
    return finish_measure(state, site, basis, 1, total);
}

MeasureResult measure_forced(const PureState &state, int site, const MeasurementBasis &basis,
                             int outcome) {
    double total = state.norm_sq();
    MeasureResult r = finish_measure(state, site, basis, outcome, total);
    if (r.prob < 1e-14) {
        throw ZeroProbabilityBranch("forced branch has probability " + std::to_string(r.prob));
    }
    return r;
}

PureState build_cluster(const LatticeSpec &spec, std::optional<ClusterInput> input,
                        int qubit_budget) {
    int n = spec.num_sites();
    if (n < 1) {
        throw std::invalid_argument("lattice has no sites");
    }
    if (n > qubit_budget) {
        throw TooManyQubits("lattice needs " + std::to_string(n) + " qubits, budget is " +
                            std::to_string(qubit_budget));
    }
    PureState state = PureState::product_plus(n);
    if (input) {
        check_site(input->site, n);
        // Replace |+> with |psi> at the designated site.
        Mat2 enc = Mat2::outer(input->psi, Vec2{1.0, 0.0}) +
                   Mat2::outer(input->psi, Vec2{0.0, 1.0});
        state.apply_1q(input->site, 0.5 * std::sqrt(2.0) * enc);
    }
    for (auto [a, b] : spec.edges()) {
        state.apply_cz(a, b);
    }
    for (const auto &[site, op] : spec.site_ops) {
        check_site(site, n);
        state.apply_1q(site, op);
    }
    return state;
}

PureState weighted_graph_state(int n, const std::vector<std::tuple<int, int, double>> &weights,
                               int qubit_budget) {
    if (n > qubit_budget) {
        throw TooManyQubits("weighted graph state too large");
    }
    PureState state = PureState::product_plus(n);
    for (auto &[a, b, phi] : weights) {
        state.apply_cp(a, b, phi);
    }
    return state;
}

Eigen::MatrixXcd reduced_density(const PureState &state, const std::vector<int> &sites) {
    int k = static_cast<int>(sites.size());
    if (k > 12) {
        throw std::invalid_argument("reduced_density: subset too large for dense output");
    }
    int n = state.n();
    std::vector<int> bits(k);
    for (int i = 0; i < k; ++i) {
        check_site(sites[i], n);
        bits[i] = n - sites[i];
    }
    uint64_t d = uint64_t{1} << k;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);

    // Gather amplitudes by (subset index, environment index).
    uint64_t env_dim = state.dim() >> k;
    std::vector<cplx> cols(d);
    for (uint64_t env = 0; env < env_dim; ++env) {
        // Spread env bits into the positions not occupied by the subset.
        uint64_t base = 0;
        uint64_t e = env;
        for (int b = 0; b < n; ++b) {
            bool is_subset = false;
            for (int i = 0; i < k; ++i) {
                if (bits[i] == b) {
                    is_subset = true;
                    break;
                }
            }
            if (!is_subset) {
                base |= (e & 1) << b;
                e >>= 1;
            }
        }
        for (uint64_t r = 0; r < d; ++r) {
            uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                // sites[0] is the most significant bit of the subset index.
                idx |= ((r >> (k - 1 - i)) & 1) << bits[i];
            }
            cols[r] = state.amp(idx);
        }
        for (uint64_t r = 0; r < d; ++r) {
            for (uint64_t c = 0; c < d; ++c) {
                rho(r, c) += cols[r] * std::conj(cols[c]);
            }
        }
    }
    double tr = rho.trace().real();
    if (tr > 0.0) {
        rho /= tr;
    }
    return rho;
}

std::vector<double> schmidt_spectrum(const PureState &state, const std::vector<int> &left) {
    int n = state.n();
    int k = static_cast<int>(left.size());
    if (k < 1 || k >= n) {
        throw std::invalid_argument("schmidt_spectrum: bipartition is trivial");
    }
    std::vector<int> left_bits(k);
    for (int i = 0; i < k; ++i) {
        check_site(left[i], n);
        left_bits[i] = n - left[i];
    }
    uint64_t rows = uint64_t{1} << k;
    uint64_t cols = state.dim() >> k;
    Eigen::MatrixXcd m(rows, cols);
    for (uint64_t c = 0; c < cols; ++c) {
        uint64_t base = 0;
        uint64_t e = c;
        for (int b = 0; b < n; ++b) {
            bool is_left = false;
            for (int i = 0; i < k; ++i) {
                if (left_bits[i] == b) {
                    is_left = true;
                    break;
                }
            }
            if (!is_left) {
                base |= (e & 1) << b;
                e >>= 1;
            }
        }
        for (uint64_t r = 0; r < rows; ++r) {
            uint64_t idx = base;
            for (int i = 0; i < k; ++i) {
                idx |= ((r >> (k - 1 - i)) & 1) << left_bits[i];
            }
            m(r, c) = state.amp(idx);
        }
    }
    double nrm = std::sqrt(state.norm_sq());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m / nrm);
    const auto &sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    return out;
}

double expectation(const PureState &state, const std::vector<std::pair<int, Pauli>> &ops) {
    PureState tmp = state;
    for (auto [site, p] : ops) {
        tmp.apply_pauli(site, p);
    }
    cplx v = state.inner(tmp) / state.norm_sq();
    return v.real();
}

double two_point(const PureState &state, int a, Pauli op_a, int b, Pauli op_b) {
    if (a == b) {
        throw std::invalid_argument("two_point: sites must differ");
    }
    double joint = expectation(state, {{a, op_a}, {b, op_b}});
    double ea = expectation(state, {{a, op_a}});
    double eb = expectation(state, {{b, op_b}});
    return joint - ea * eb;
}

double fidelity(const PureState &a, const PureState &b) {
    cplx ov = a.inner(b);
    return std::norm(ov) / (a.norm_sq() * b.norm_sq());
}

namespace {

// Runs the forced-measurement plan for one logical basis input and returns
// the unnormalized output amplitudes (over the output sites, first output
// site most significant).
std::vector<cplx> run_plan_branch(const ExtractionPlan &plan, uint64_t input_index) {
    int n = plan.lattice.num_sites();
    PureState state = PureState::product_plus(n);
    // Encode the logical input product state.
    for (size_t i = 0; i < plan.input_sites.size(); ++i) {
        int bit = (input_index >> (plan.input_sites.size() - 1 - i)) & 1;
        Vec2 v = bit ? Vec2{0.0, 1.0} : Vec2{1.0, 0.0};
        Mat2 enc = Mat2::outer(v, Vec2{1.0, 0.0}) + Mat2::outer(v, Vec2{0.0, 1.0});
        state.apply_1q(plan.input_sites[i], 0.5 * std::sqrt(2.0) * enc);
    }
    for (auto [a, b] : plan.lattice.edges()) {
        state.apply_cz(a, b);
    }
    for (const auto &[site, op] : plan.lattice.site_ops) {
        state.apply_1q(site, op);
    }

    // Positions shift as qubits are projected out.
    std::vector<int> pos(n + 1);
    for (int s = 1; s <= n; ++s) {
        pos[s] = s;
    }
    auto remove_site = [&](int s) {
        int p = pos[s];
        pos[s] = -1;
        for (int t = 1; t <= n; ++t) {
            if (pos[t] > p) {
                --pos[t];
            }
        }
    };
    for (const auto &step : plan.steps) {
        if (pos[step.site] < 0) {
            throw std::invalid_argument("extraction plan measures a site twice");
        }
        const Vec2 &bra = step.outcome == 0 ? step.basis.m0 : step.basis.m1;
        state = project_site(state, pos[step.site], bra);
        remove_site(step.site);
    }
    size_t n_out = plan.output_sites.size();
    if (state.n() != static_cast<int>(n_out)) {
        throw std::invalid_argument("extraction plan must measure all non-output sites");
    }
    // Reorder remaining qubits so output_sites[0] is most significant.
    std::vector<cplx> out(uint64_t{1} << n_out);
    for (uint64_t idx = 0; idx < out.size(); ++idx) {
        uint64_t src = 0;
        for (size_t i = 0; i < n_out; ++i) {
            int p = pos[plan.output_sites[i]];
            if (p < 0) {
                throw std::invalid_argument("output site was measured");
            }
            int bit = (idx >> (n_out - 1 - i)) & 1;
            src |= static_cast<uint64_t>(bit) << (state.n() - p);
        }
        out[idx] = state.amp(src);
    }
    return out;
}

}  // namespace

Mat2 extract_teleported(const ExtractionPlan &plan) {
    if (plan.input_sites.size() != 1 || plan.output_sites.size() != 1) {
        throw std::invalid_argument("extract_teleported expects one input and one output site");
    }
    auto col0 = run_plan_branch(plan, 0);
    auto col1 = run_plan_branch(plan, 1);
    return Mat2{col0[0], col1[0], col0[1], col1[1]};
}

Mat4 extract_teleported_2q(const ExtractionPlan &plan) {
    if (plan.input_sites.size() != 2 || plan.output_sites.size() != 2) {
        throw std::invalid_argument("extract_teleported_2q expects two input and output sites");
    }
    Mat4 out;
    for (uint64_t col = 0; col < 4; ++col) {
        auto v = run_plan_branch(plan, col);
        for (int r = 0; r < 4; ++r) {
            out(r, col) = v[r];
        }
    }
    return out;
}

void dump_amplitudes_csv(const PureState &state, const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path);
    }
    f << "index,re,im\n";
    char buf[80];
    for (uint64_t i = 0; i < state.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n", (unsigned long long)i,
                      state.amp(i).real(), state.amp(i).imag());
        f << buf;
    }
}

void dump_amplitudes_binary(const PureState &state, const std::string &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path);
    }
    const char magic[8] = {'S', 'L', 'S', 'V', 'A', 'M', 'P', '1'};
    f.write(magic, 8);
    uint64_t n = state.n();
    f.write(reinterpret_cast<const char *>(&n), 8);
    for (uint64_t i = 0; i < state.dim(); ++i) {
        double re = state.amp(i).real(), im = state.amp(i).imag();
        f.write(reinterpret_cast<const char *>(&re), 8);
        f.write(reinterpret_cast<const char *>(&im), 8);
    }
}

}  // namespace sloccsim
