/*
   Copyright 2026 The obda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Reference computations used only by the tests.  Nothing here calls the
// library's own numerics.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

// 15-point Kronrod rule with its embedded 7-point Gauss rule.
inline constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
inline constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
inline constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

using Integrand = std::function<long double(long double)>;

inline void gk15(const Integrand& f, long double a, long double b, long double& kronrod, long double& gauss) {
    const long double c = 0.5L * (a + b);
    const long double h = 0.5L * (b - a);
    const long double fc = f(c);
    kronrod = fc * kWgk[7];
    gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const long double x = h * kXgk[j];
        const long double pair = f(c - x) + f(c + x);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    kronrod *= h;
    gauss *= h;
}

inline long double adaptive(const Integrand& f, long double a, long double b, long double tol, int depth) {
    long double k = 0, g = 0;
    gk15(f, a, b, k, g);
    if (depth == 0 || std::fabs(k - g) <= tol) return k;
    const long double m = 0.5L * (a + b);
    return adaptive(f, a, m, 0.5L * tol, depth - 1) + adaptive(f, m, b, 0.5L * tol, depth - 1);
}

/// E1(x) = int_x^inf e^-t / t dt, integrated in s = ln t:
/// int_{ln x}^{ln(x + 60)} exp(-e^s) ds (the dropped tail is below e^-60 E1).
inline double e1_quadrature(double x) {
    const Integrand f = [](long double s) { return std::exp(-std::exp(s)); };
    const long double a = std::log(static_cast<long double>(x));
    const long double b = std::log(static_cast<long double>(x) + 60.0L);
    long double rough = 0, g = 0;
    gk15(f, a, b, rough, g);
    return static_cast<double>(adaptive(f, a, b, std::fabs(rough) * 1e-17L, 40));
}

/// Kolmogorov-Smirnov distance between a sample and a continuous CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        d = std::max({d, (i + 1) / n - F, F - i / n});
    }
    return d;
}

/// Asymptotic KS critical value at significance 0.01.
inline double ks_critical_01(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

/// Binomial(K, p) CDF by direct summation of products (no lgamma).
inline std::vector<double> binomial_cdf(int K, double p) {
    std::vector<double> pmf(K + 1, 0.0);
    pmf[0] = std::pow(1.0 - p, K);
    for (int k = 1; k <= K; ++k) pmf[k] = pmf[k - 1] * (K - k + 1) / k * p / (1.0 - p);
    std::vector<double> cdf(K + 1);
    double acc = 0.0;
    for (int k = 0; k <= K; ++k) cdf[k] = (acc += pmf[k]);
    return cdf;
}

/// Header-keyed CSV rows as strings.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::map<std::string, std::string>> rows;

    double num(std::size_t r, const std::string& col) const { return std::stod(rows.at(r).at(col)); }
    const std::string& str(std::size_t r, const std::string& col) const { return rows.at(r).at(col); }
};

inline Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Csv out;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> f;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (!f.empty() && !f.back().empty() && f.back().back() == '\r') f.back().pop_back();
        return f;
    };
    std::getline(in, line);
    out.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split(line);
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < out.header.size() && i < f.size(); ++i) row[out.header[i]] = f[i];
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace oracle
