#include "qising/trace_map.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qising::tracemap {

namespace {

double clamp_coord(double v) {
    if (v > kCoordCap) return kCoordCap;
    if (v < -kCoordCap) return -kCoordCap;
    return v;  // finite by construction: inputs are capped, 2xy-z <= 2e200 + 1e100
}

// Log-magnitude coordinate: value = sign * exp(log_abs). Used once orbits
// outgrow the floating range; the recurrence is evaluated through the dominant
// 2xy term with the |z/2xy| correction folded in via log1p.
struct LogTriple {
    double sx, lx;  // sign, log|x|
    double sy, ly;
    double sz, lz;

    static LogTriple from(const TraceTriple& t) {
        auto enc = [](double v, double& s, double& l) {
            s = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
            l = v == 0 ? -1e308 : std::log(std::fabs(v));
        };
        LogTriple r{};
        enc(t.x, r.sx, r.lx);
        enc(t.y, r.sy, r.ly);
        enc(t.z, r.sz, r.lz);
        return r;
    }

    void step() {
        const double ln2 = 0.6931471805599453;
        double dom = ln2 + lx + ly;       // log|2xy|
        double sdom = sx * sy;
        double lnew, snew;
        if (lz - dom < -1.0) {
            // x' = 2xy (1 - z/(2xy)), |q| < e^{-1}
            double q = sz * sdom * std::exp(lz - dom);
            lnew = dom + std::log1p(-q);
            snew = sdom;
        } else if (dom - lz < -1.0) {
            double q = sdom * sz * std::exp(dom - lz);
            lnew = lz + std::log1p(-q);
            snew = -sz;
        } else {
            // comparable magnitudes: evaluate at a common scale
            double base = std::max(dom, lz);
            double v = sdom * std::exp(dom - base) - sz * std::exp(lz - base);
            if (v == 0) { snew = 0; lnew = -1e308; }
            else { snew = v > 0 ? 1 : -1; lnew = base + std::log(std::fabs(v)); }
        }
        sz = sy; lz = ly;
        sy = sx; ly = lx;
        sx = snew; lx = lnew;
    }

    bool certified() const {
        return lx > 0 && ly > 0 && (lx + ly) > lz;
    }
    double log_max_norm() const { return std::max(lx, std::max(ly, lz)); }
};

}  // namespace

TraceTriple apply_f(const TraceTriple& t) {
    double x = clamp_coord(t.x), y = clamp_coord(t.y), z = clamp_coord(t.z);
    return {clamp_coord(2.0 * x * y - z), x, y};
}

TraceTriple apply_f_inv(const TraceTriple& t) {
    double x = clamp_coord(t.x), y = clamp_coord(t.y), z = clamp_coord(t.z);
    return {y, z, clamp_coord(2.0 * y * z - x)};
}

double fricke_vogt(const TraceTriple& t) {
    return t.x * t.x + t.y * t.y + t.z * t.z - 2.0 * t.x * t.y * t.z - 1.0;
}

bool certified_escape(const TraceTriple& t) {
    return std::fabs(t.x) > 1.0 && std::fabs(t.y) > 1.0 &&
           std::fabs(t.x * t.y) > std::fabs(t.z);
}

OrbitOutcome iterate_orbit(const TraceTriple& t0, int n_max, double bound) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (!(bound > 0)) throw std::invalid_argument("bound must be positive");
    const int hard_cap = 4 * n_max + 64;
    TraceTriple t = t0;
    bool over_bound = false;
    OrbitOutcome out;
    for (int n = 0; n <= hard_cap; ++n) {
        if (certified_escape(t)) {
            out.status = OrbitStatus::Escaped;
            out.escape_index = n;
            out.steps_used = n;
            out.certified = true;
            return out;
        }
        double norm = std::max(std::fabs(t.x), std::max(std::fabs(t.y), std::fabs(t.z)));
        if (norm > bound) over_bound = true;
        if (!over_bound && n == n_max) {
            out.status = OrbitStatus::Bounded;
            out.steps_used = n_max;
            return out;
        }
        t = apply_f(t);
    }
    // magnitude blow-up that never certified within the hard cap
    out.status = over_bound ? OrbitStatus::Escaped : OrbitStatus::Bounded;
    out.steps_used = hard_cap;
    out.certified = false;
    return out;
}

EscapeRatePair escape_rate_detail(const TraceTriple& t0, double tol, int n_cap) {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    const double log_phi = 0.4812118250596034;  // log golden mean
    TraceTriple t = t0;
    bool in_log = false;
    LogTriple lt{};
    bool ever_certified = certified_escape(t0);
    std::vector<double> est;
    double prev = 0, prev_first = 0, cur_first = 0;
    for (int n = 1; n <= n_cap; ++n) {
        if (!in_log) {
            // step in plain doubles; inputs stay <= cap so 2xy - z is finite
            double xn = 2.0 * t.x * t.y - t.z;
            t = {xn, t.x, t.y};
            if (std::fabs(xn) > kCoordCap) {
                lt = LogTriple::from(t);
                in_log = true;
            }
        } else {
            lt.step();
        }
        double log_norm, log_first;
        if (!in_log) {
            ever_certified = ever_certified || certified_escape(t);
            log_norm = std::log(std::max(std::fabs(t.x), std::max(std::fabs(t.y), std::fabs(t.z))));
            log_first = t.x == 0 ? -1e308 : std::log(std::fabs(t.x));
        } else {
            ever_certified = ever_certified || lt.certified();
            log_norm = lt.log_max_norm();
            log_first = lt.lx;
        }
        double denom = std::exp(n * log_phi);
        double r = log_norm / denom;
        cur_first = log_first / denom;
        est.push_back(r);
        if (n >= 8 && ever_certified && std::fabs(r - prev) < tol &&
            std::fabs(cur_first - prev_first) < tol) {
            return {r, cur_first, est};
        }
        prev = r;
        prev_first = cur_first;
    }
    if (!ever_certified) throw std::domain_error("not escaping");
    return {prev, prev_first, est};
}

double escape_rate(const TraceTriple& t, double tol) {
    return escape_rate_detail(t, tol).rate_norm;
}

std::array<TraceTriple, 4> singularities() {
    return {TraceTriple{1, 1, 1}, TraceTriple{-1, -1, 1}, TraceTriple{1, -1, -1},
            TraceTriple{-1, 1, -1}};
}

TraceTriple rho1_point(double x) {
    if (x == 0.5) throw std::domain_error("rho1 undefined at x = 1/2");
    return {x, x / (2.0 * x - 1.0), x};
}

TraceTriple apply_symmetry(SymmetryName name, const TraceTriple& t) {
    switch (name) {
        case SymmetryName::S:  return {t.z, t.y, t.x};
        case SymmetryName::S2: return {-t.x, -t.y, t.z};
        case SymmetryName::S3: return {t.x, -t.y, -t.z};
        case SymmetryName::S4: return {-t.x, t.y, -t.z};
    }
    throw std::invalid_argument("unknown symmetry");
}

SymmetryName symmetry_from_string(const std::string& name) {
    if (name == "s") return SymmetryName::S;
    if (name == "s2") return SymmetryName::S2;
    if (name == "s3") return SymmetryName::S3;
    if (name == "s4") return SymmetryName::S4;
    throw std::invalid_argument("unknown symmetry name: " + name);
}

Mat3 differential(const TraceTriple& t) {
    return {{{2.0 * t.y, 2.0 * t.x, -1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

double mat_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 differential_iterate(const TraceTriple& t0, int n) {
    Mat3 D{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    TraceTriple t = t0;
    for (int i = 0; i < n; ++i) {
        D = mat_mul(differential(t), D);
        t = apply_f(t);
    }
    return D;
}

double log_abs_first_after(const TraceTriple& t0, int n) {
    TraceTriple t = t0;
    bool in_log = false;
    LogTriple lt{};
    for (int i = 0; i < n; ++i) {
        if (!in_log) {
            double xn = 2.0 * t.x * t.y - t.z;
            t = {xn, t.x, t.y};
            if (std::fabs(xn) > kCoordCap) {
                lt = LogTriple::from(t);
                in_log = true;
            }
        } else {
            lt.step();
        }
    }
    if (in_log) return lt.lx;
    return t.x == 0 ? -1e308 : std::log(std::fabs(t.x));
}

}  // namespace qising::tracemap
