// Copyright 2026 The paccess Authors
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

#include "paccess/statespace.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <tuple>

#include <unsupported/Eigen/MatrixFunctions>

#include "paccess/errors.h"
#include "paccess/parallel.h"

namespace paccess {

namespace {

void sort_entries(std::vector<Triplet> &entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Triplet &l, const Triplet &r) { return std::tie(l.row, l.col) < std::tie(r.row, r.col); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return v;
}

Eigen::MatrixXcd sigma(int axis) {
    using cd = std::complex<double>;
    Eigen::MatrixXcd m(2, 2);
    switch (axis) {
        case 0:
            m << 0, 1, 1, 0;
            break;
        case 1:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        default:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

}  // namespace

Eigen::MatrixXd SparseMatrix::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (const auto &t : entries) {
        m(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) += t.value;
    }
    return m;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != cols || y.size() != rows) {
        throw DimensionError("sparse matrix-vector product with mismatched sizes");
    }
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto &t : entries) {
        y[t.row] += t.value * x[t.col];
    }
}

bool SparseMatrix::is_antisymmetric() const {
    if (rows != cols) {
        return false;
    }
    std::map<std::pair<std::size_t, std::size_t>, double> lookup;
    for (const auto &t : entries) {
        lookup[{t.row, t.col}] += t.value;
    }
    for (const auto &[key, value] : lookup) {
        auto it = lookup.find({key.second, key.first});
        double mirror = it == lookup.end() ? 0.0 : it->second;
        if (value + mirror != 0.0) {
            return false;
        }
    }
    return true;
}

StateSpaceModel build_model(const AccessibleSet &set, const HamiltonianSpec &spec, const MeasurementSpec &meas,
                            unsigned threads) {
    if (set.members.empty()) {
        throw InputError("cannot build a model over an empty accessible set");
    }
    if (spec.num_qubits != set.num_qubits || meas.num_qubits != set.num_qubits) {
        throw DimensionError("Hamiltonian, measurements and accessible set act on different qubit counts");
    }
    auto index = set.index();
    if (index.size() != set.members.size()) {
        throw InputError("accessible set ordering contains duplicate members");
    }
    std::size_t size = set.members.size();

    struct Accum {
        double value = 0;
        std::vector<std::size_t> terms;
    };
    std::vector<std::map<std::size_t, Accum>> rows(size);
    std::vector<std::string> failures(size);
    parallel_for(size, threads, [&](std::size_t j) {
        for (std::size_t m = 0; m < spec.terms.size(); ++m) {
            const auto &term = spec.terms[m];
            auto br = bracket(term.string, set.members[j]);
            if (!br) {
                continue;
            }
            auto it = index.find(br->string);
            if (it == index.end()) {
                failures[j] = "bracket of " + term.string.str() + " with " + set.members[j].str() +
                              " leaves the accessible set";
                return;
            }
            // i h [H_m, O_j] = i h (i c O_l) = -h c O_l
            Accum &cell = rows[j][it->second];
            cell.value += -term.coefficient * br->coefficient;
            cell.terms.push_back(m);
        }
    });
    for (const auto &f : failures) {
        if (!f.empty()) {
            throw ConsistencyError(f);
        }
    }

    StateSpaceModel model;
    model.ordering = set.members;
    model.a = {size, size, {}};
    model.b = {size, size, {}};
    for (std::size_t j = 0; j < size; ++j) {
        for (auto &[l, cell] : rows[j]) {
            if (cell.value == 0.0) {
                continue;
            }
            model.a.entries.push_back({j, l, cell.value});
            model.a_terms.push_back(std::move(cell.terms));
        }
    }

    model.c = {meas.operators.size(), size, {}};
    for (std::size_t r = 0; r < meas.operators.size(); ++r) {
        for (const auto &t : meas.operators[r].terms()) {
            auto it = index.find(t.string);
            if (it == index.end()) {
                throw InputError("measurement string " + t.string.str() + " is not in the accessible set");
            }
            model.c.entries.push_back({r, it->second, t.coefficient});
        }
    }
    sort_entries(model.c.entries);
    model.measurements = meas.operators;
    return model;
}

ProductState ProductState::parse(std::string_view text) {
    ProductState state;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos));
        std::array<double, 3> b{};
        if (token == "0") {
            b = {0, 0, 1};
        } else if (token == "1") {
            b = {0, 0, -1};
        } else if (token == "+") {
            b = {1, 0, 0};
        } else if (token == "-") {
            b = {-1, 0, 0};
        } else if (token == "i+" || token == "+i") {
            b = {0, 1, 0};
        } else if (token == "i-" || token == "-i") {
            b = {0, -1, 0};
        } else {
            throw ParseError("unknown single-qubit state '" + std::string(token) + "'", pos);
        }
        state.bloch.push_back(b);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return state;
}

Eigen::MatrixXcd ProductState::density_matrix() const {
    if (bloch.empty() || bloch.size() > kDenseQubitCap) {
        throw DimensionError("dense product states need 1.." + std::to_string(kDenseQubitCap) + " qubits");
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Ones(1, 1);
    for (const auto &b : bloch) {
        Eigen::MatrixXcd site = Eigen::MatrixXcd::Identity(2, 2);
        for (int a = 0; a < 3; ++a) {
            site += b[a] * sigma(a);
        }
        site *= 0.5;
        Eigen::MatrixXcd next(rho.rows() * 2, rho.cols() * 2);
        for (Eigen::Index i = 0; i < rho.rows(); ++i) {
            for (Eigen::Index j = 0; j < rho.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = rho(i, j) * site;
            }
        }
        rho = std::move(next);
    }
    return rho;
}

std::vector<double> initial_state_vector(const Eigen::MatrixXcd &rho, std::span<const PauliString> ordering) {
    if (rho.rows() != rho.cols()) {
        throw DimensionError("density matrix must be square");
    }
    if (std::abs(rho.trace() - std::complex<double>(1, 0)) > 1e-10) {
        throw InputError("density matrix must have unit trace");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InputError("density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw InputError("density matrix must be positive semidefinite");
    }
    std::vector<double> x0;
    x0.reserve(ordering.size());
    for (const auto &p : ordering) {
        x0.push_back(trace_with(p, rho).real());
    }
    return x0;
}

std::vector<double> initial_state_vector(const ProductState &state, std::span<const PauliString> ordering) {
    for (const auto &b : state.bloch) {
        double norm = std::hypot(b[0], b[1], b[2]);
        if (norm > 1 + 1e-12) {
            throw InputError("Bloch vector longer than 1");
        }
    }
    std::vector<double> x0;
    x0.reserve(ordering.size());
    for (const auto &p : ordering) {
        if (p.num_qubits() != state.bloch.size()) {
            throw DimensionError("product state has " + std::to_string(state.bloch.size()) + " sites, operator has " +
                                 std::to_string(p.num_qubits()));
        }
        double v = 1;
        for (std::size_t j = 0; j < p.num_qubits() && v != 0; ++j) {
            Cell c = p.cell(j);
            if (c != Cell::I) {
                v *= state.bloch[j][static_cast<int>(c) - 1];
            }
        }
        x0.push_back(v);
    }
    return x0;
}

Trajectory simulate_reduced(const StateSpaceModel &model, std::span<const double> x0, std::span<const double> times,
                            SimulateOptions options) {
    std::size_t size = model.a.rows;
    if (x0.size() != size) {
        throw DimensionError("initial state has " + std::to_string(x0.size()) + " entries, model has " +
                             std::to_string(size));
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || times[i] < 0 || (i > 0 && times[i] < times[i - 1])) {
            throw InputError("times must be finite, nonnegative and sorted");
        }
    }
    if (!(options.step > 0)) {
        throw InputError("integrator step must be positive");
    }

    Trajectory out;
    out.times.assign(times.begin(), times.end());
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(x0.data(), static_cast<Eigen::Index>(size));
    double x0_norm = x.norm();
    double t = 0;

    if (options.integrator == Integrator::MatrixExponential) {
        if (size > kExpmStateCap) {
            throw InputError("matrix exponential is limited to " + std::to_string(kExpmStateCap) +
                             " states; use the stepping integrator");
        }
        Eigen::MatrixXd a = model.a.dense();
        std::map<double, Eigen::MatrixXd> cache;
        for (double target : times) {
            double gap = target - t;
            if (gap > 0) {
                auto it = cache.find(gap);
                if (it == cache.end()) {
                    it = cache.emplace(gap, (a * gap).exp().eval()).first;
                }
                x = it->second * x;
            }
            t = target;
            out.x.emplace_back(x.data(), x.data() + size);
        }
    } else {
        double bound = 0;
        std::vector<double> row_sums(size, 0.0);
        for (const auto &e : model.a.entries) {
            row_sums[e.row] += std::abs(e.value);
        }
        for (double r : row_sums) {
            bound = std::max(bound, r);
        }
        // Explicit RK4 is stable on the imaginary axis up to |h lambda| = 2 sqrt(2).
        if (bound * options.step > 2.8) {
            out.diagnostics.push_back("step " + format_real(options.step) + " may be unstable: |A| bound " +
                                      format_real(bound));
        }
        std::vector<double> cur(x.data(), x.data() + size), k1(size), k2(size), k3(size), k4(size), tmp(size);
        auto rk4 = [&](double h) {
            model.a.multiply(cur, k1);
            for (std::size_t i = 0; i < size; ++i) tmp[i] = cur[i] + 0.5 * h * k1[i];
            model.a.multiply(tmp, k2);
            for (std::size_t i = 0; i < size; ++i) tmp[i] = cur[i] + 0.5 * h * k2[i];
            model.a.multiply(tmp, k3);
            for (std::size_t i = 0; i < size; ++i) tmp[i] = cur[i] + h * k3[i];
            model.a.multiply(tmp, k4);
            for (std::size_t i = 0; i < size; ++i) {
                cur[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            }
        };
        for (double target : times) {
            double gap = target - t;
            auto steps = static_cast<std::size_t>(std::floor(gap / options.step));
            for (std::size_t s = 0; s < steps; ++s) {
                rk4(options.step);
            }
            double rest = gap - static_cast<double>(steps) * options.step;
            if (rest > 0) {
                rk4(rest);
            }
            t = target;
            for (double v : cur) {
                if (!std::isfinite(v)) {
                    throw InstabilityError("stepping integrator diverged before t = " + format_real(target));
                }
            }
            out.x.push_back(cur);
        }
    }

    double drift = 0;
    for (const auto &row : out.x) {
        double norm = Eigen::Map<const Eigen::VectorXd>(row.data(), static_cast<Eigen::Index>(size)).norm();
        if (!std::isfinite(norm)) {
            throw InstabilityError("trajectory contains non-finite values");
        }
        drift = std::max(drift, std::abs(norm - x0_norm));
    }
    if (model.a.is_antisymmetric() && drift > 1e-6 * std::max(1.0, x0_norm)) {
        out.diagnostics.push_back("state norm drifted by " + format_real(drift));
    }

    out.y.reserve(out.x.size());
    for (const auto &row : out.x) {
        std::vector<double> y(model.c.rows);
        model.c.multiply(row, y);
        out.y.push_back(std::move(y));
    }
    return out;
}

std::vector<double> parse_time_grid(std::string_view text) {
    std::size_t first = text.find(':');
    std::size_t second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw InputError("time grid must look like start:stop:step, got '" + std::string(text) + "'");
    }
    double start = parse_double(text.substr(0, first), "time grid start");
    double stop = parse_double(text.substr(first + 1, second - first - 1), "time grid stop");
    double step = parse_double(text.substr(second + 1), "time grid step");
    if (start < 0 || stop < start || !(step > 0)) {
        throw InputError("time grid needs 0 <= start <= stop and step > 0");
    }
    auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000000) {
        throw InputError("time grid has too many points");
    }
    std::vector<double> times(count);
    for (std::size_t i = 0; i < count; ++i) {
        times[i] = start + static_cast<double>(i) * step;
    }
    return times;
}

}  // namespace paccess
