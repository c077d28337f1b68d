#include "gcfluct/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcfluct/errors.hpp"
#include "gcfluct/fluctuation_stats.hpp"
#include "gcfluct/gcs_linalg.hpp"
#include "gcfluct/text_format.hpp"
#include "gcfluct/unruh_frames.hpp"
#include "gcfluct/verify_suite.hpp"

namespace gcfluct {

namespace {

// Usage-level failure raised by the command bodies (exit 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CommonOptions {
    std::string input;
    std::string output;
    std::uint64_t seed = 42;
};

struct AverageOptions {
    std::string functional = "riemann";
    std::string integrand = "one";
    std::string scheme;
    int points = 0;
};

struct UnruhOptions {
    std::string sweep = "1:1:1";
    double m = 1.0;
    double t = 1.0;
    std::string b_field = "2/3";
    std::string units = "natural";
};

// Accepts a plain number or a fraction "a/b".
double parse_number_or_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_double(s);
    const double den = parse_double(s.substr(slash + 1));
    if (den == 0.0) throw ParseError("zero denominator in '" + s + "'");
    return parse_double(s.substr(0, slash)) / den;
}

struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    long long count = 1;

    double at(long long i) const {
        if (count == 1) return start;
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

Sweep parse_sweep(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--sweep expects start:stop:count, got '" + spec + "'");
    Sweep s;
    try {
        s.start = parse_number_or_fraction(parts[0]);
        s.stop = parse_number_or_fraction(parts[1]);
        s.count = parse_int(parts[2]);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--sweep: ") + e.what());
    }
    if (s.count < 1) throw UsageError("--sweep: count must be >= 1");
    if (!std::isfinite(s.start) || !std::isfinite(s.stop)) {
        throw UsageError("--sweep: bounds must be finite");
    }
    if (!(s.start > 0.0) || !(s.stop > 0.0)) {
        throw UsageError("--sweep: accelerations must be > 0 (the temperature must be positive)");
    }
    return s;
}

// --output file when given, `out` otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int cmd_verify(int n, const CommonOptions& common, std::ostream& out, std::ostream& err) {
    if (n < 1) throw UsageError("--n must be >= 1");
    VerifyOptions opts;
    opts.n = n;
    opts.seed = common.seed;
    if (!common.input.empty()) {
        const MatrixDocument doc = load_matrix_document(common.input);
        if (doc.kind != MatrixKind::Gcs) {
            throw UsageError("verify --input expects a matrix document of kind gcs");
        }
        opts.candidate = Gcs(doc.matrix);
    }
    const auto results = run_verify_suite(opts);
    Sink sink(common.output, out);
    std::size_t failed = 0;
    std::vector<std::string> failed_names;
    for (const auto& r : results) {
        sink.get() << format_check(r) << "\n";
        if (!r.pass()) {
            ++failed;
            failed_names.push_back(r.name);
        }
    }
    if (failed == 0) {
        sink.get() << "ALL PASS (" << results.size() << " checks)\n";
        return kExitOk;
    }
    sink.get() << "FAILED " << failed << " of " << results.size() << " checks\n";
    err << "verify: violated:";
    for (const auto& name : failed_names) err << " " << name;
    err << "\n";
    return kExitCheckFailed;
}

int cmd_classify(const CommonOptions& common, std::ostream& out, std::ostream& err) {
    if (common.input.empty()) throw UsageError("classify requires --input <matrix file>");
    const MatrixDocument doc = load_matrix_document(common.input);
    std::optional<Gcs> g;
    switch (doc.kind) {
        case MatrixKind::Gcs: g = Gcs(doc.matrix); break;
        case MatrixKind::Omega: g = build_symplectic_gcs(SymplecticForm(doc.matrix)); break;
        case MatrixKind::ComplexJ: g = build_complex_gcs(ComplexStructure(doc.matrix)); break;
        case MatrixKind::BField:
            throw UsageError("classify: a B-field document does not define a structure");
    }
    const GcsReport report = verify_gcs(*g);
    if (!report.all_pass()) {
        err << "classify: not a generalized complex structure; violated axiom(s): "
            << report.failures() << "\n";
        for (const auto& c : report.checks) {
            err << "  " << c.name << " residual " << c.residual << " (tolerance " << c.tolerance
                << ")\n";
        }
        return kExitCheckFailed;
    }
    const int k = gcs_type(*g);
    Sink sink(common.output, out);
    sink.get() << "type k = " << k << "\n";
    return kExitOk;
}

QuadratureSpec quadrature_from(const KeyValueDoc& cfg, const AverageOptions& opt,
                               const CommonOptions& common, bool seed_given) {
    QuadratureSpec q;
    std::string scheme = cfg.has("scheme") ? cfg.get_string("scheme") : "tensor-grid";
    if (!opt.scheme.empty()) scheme = opt.scheme;
    if (scheme == "tensor-grid") q.scheme = QuadratureScheme::TensorGrid;
    else if (scheme == "monte-carlo") q.scheme = QuadratureScheme::MonteCarlo;
    else throw UsageError("unknown scheme '" + scheme + "' (tensor-grid | monte-carlo)");
    q.points = static_cast<int>(cfg.get_int("points", q.points));
    if (opt.points > 0) q.points = opt.points;
    q.samples = cfg.get_int("samples", q.samples);
    q.truncation = cfg.get_double("truncation", q.truncation);
    q.seed = static_cast<std::uint64_t>(cfg.get_int("seed", static_cast<long long>(q.seed)));
    if (seed_given) q.seed = common.seed;
    if (q.points < 2) throw UsageError("points must be >= 2");
    if (!(q.truncation > 0.0)) throw UsageError("truncation must be > 0");
    if (q.samples < 2) throw UsageError("samples must be >= 2");
    return q;
}

// Broadcasts a single value to `dim` entries.
std::vector<double> box_side(const KeyValueDoc& cfg, const std::string& key, std::size_t dim,
                             double fallback) {
    if (!cfg.has(key)) return std::vector<double>(dim, fallback);
    auto v = cfg.get_doubles(key);
    if (v.size() == 1) return std::vector<double>(dim, v[0]);
    if (v.size() != dim) throw UsageError(key + " must have 1 or " + std::to_string(dim) + " entries");
    return v;
}

int cmd_average(const AverageOptions& opt, const CommonOptions& common, bool seed_given,
                std::ostream& out) {
    static const std::set<std::string> kKeys{
        "T",    "V",     "P",      "S",      "C_V",        "dPdV_T", "k_B",  "S0",
        "P0",   "V0",    "T0",     "scheme", "points",     "truncation", "seed", "samples",
        "g_TT", "g_VV",  "omega",  "n",      "box_lo",     "box_hi", "h",    "h_im"};
    const KeyValueDoc cfg = common.input.empty() ? KeyValueDoc{} : KeyValueDoc::load(common.input);
    cfg.require_known_keys(kKeys);

    static const std::map<std::string, std::string> kIntegrandHome{
        {"one", ""}, {"T2", "riemann"}, {"q1", "symplectic"}, {"absz2", "hermitian"}};
    const auto home = kIntegrandHome.find(opt.integrand);
    if (home == kIntegrandHome.end()) {
        throw UsageError("unknown integrand '" + opt.integrand + "' (one | T2 | q1 | absz2)");
    }
    if (opt.functional != "riemann" && opt.functional != "symplectic" &&
        opt.functional != "hermitian") {
        throw UsageError("unknown functional '" + opt.functional +
                         "' (riemann | symplectic | hermitian)");
    }
    if (!home->second.empty() && home->second != opt.functional) {
        throw UsageError("integrand '" + opt.integrand + "' is defined for the " + home->second +
                         " functional only");
    }
    const QuadratureSpec quad = quadrature_from(cfg, opt, common, seed_given);

    AverageResult result;
    if (opt.functional == "riemann") {
        FluctuationMetric metric;
        if (cfg.has("g_TT") || cfg.has("g_VV")) {
            metric = {cfg.get_double("g_TT"), cfg.get_double("g_VV")};
        } else {
            ThermoState s;
            s.T = cfg.get_double("T", s.T);
            s.V = cfg.get_double("V", s.V);
            s.C_V = cfg.get_double("C_V", s.C_V);
            s.dPdV_T = cfg.get_double("dPdV_T", s.dPdV_T);
            s.k_B = cfg.get_double("k_B", s.k_B);
            metric = fluctuation_metric(s);
        }
        std::function<double(double, double)> f = [](double, double) { return 1.0; };
        if (opt.integrand == "T2") f = [](double t, double) { return t * t; };
        result = riemann_average(f, metric, quad);
    } else if (opt.functional == "symplectic") {
        Matrix omega;
        if (cfg.has("omega")) {
            const auto v = cfg.get_doubles("omega");
            const auto dim = static_cast<Eigen::Index>(std::lround(std::sqrt(v.size())));
            if (dim * dim != static_cast<Eigen::Index>(v.size())) {
                throw UsageError("omega must be a square row-major matrix");
            }
            omega = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                   Eigen::RowMajor>>(v.data(), dim, dim);
        } else {
            omega = standard_symplectic(static_cast<int>(cfg.get_int("n", 1))).matrix();
        }
        const SymplecticForm w(omega);
        const auto dim = static_cast<std::size_t>(omega.rows());
        const Box box{box_side(cfg, "box_lo", dim, 0.0), box_side(cfg, "box_hi", dim, 1.0)};
        PointFunction f = [](std::span<const double>) { return 1.0; };
        // Coordinates are ordered (p1, q1, p2, q2, ...).
        if (opt.integrand == "q1") f = [](std::span<const double> x) { return x[1]; };
        result = symplectic_average(f, w, box, quad);
    } else {
        std::vector<double> re = cfg.has("h") ? cfg.get_doubles("h") : std::vector<double>{1.0};
        std::vector<double> im = cfg.has("h_im") ? cfg.get_doubles("h_im")
                                                 : std::vector<double>(re.size(), 0.0);
        const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(re.size())));
        if (n * n != static_cast<Eigen::Index>(re.size()) || im.size() != re.size()) {
            throw UsageError("h (and h_im) must be square row-major matrices of equal size");
        }
        Eigen::MatrixXcd h(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto k = static_cast<std::size_t>(i * n + j);
                h(i, j) = {re[k], im[k]};
            }
        }
        ComplexFunction f = [](std::span<const std::complex<double>>) { return 1.0; };
        if (opt.integrand == "absz2") {
            f = [](std::span<const std::complex<double>> z) {
                double s = 0.0;
                for (const auto& v : z) s += std::norm(v);
                return s;
            };
        }
        result = hermitian_average(f, h, quad);
    }

    Sink sink(common.output, out);
    sink.get() << "name,value,stderr\n";
    sink.get() << opt.functional << "." << opt.integrand << "," << format_double(result.value)
               << "," << format_double(result.std_error) << "\n";
    return kExitOk;
}

int cmd_unruh(const UnruhOptions& opt, const CommonOptions& common, std::ostream& out) {
    const Sweep sweep = parse_sweep(opt.sweep);
    if (!(opt.m > 0.0) || !std::isfinite(opt.m)) throw UsageError("--m must be > 0");
    if (!(opt.t >= 0.0) || !std::isfinite(opt.t)) throw UsageError("--t must be >= 0");
    double b = 0.0;
    try {
        b = parse_number_or_fraction(opt.b_field);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--B: ") + e.what());
    }
    const PhysicalConstants pc =
        opt.units == "si" ? PhysicalConstants::si() : PhysicalConstants::natural();
    const BFieldSpec field = BFieldSpec::constant(b);

    struct Row {
        double alpha, T, phase, dxi, thermal;
    };
    std::vector<Row> rows(static_cast<std::size_t>(sweep.count));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < sweep.count; ++i) {
        const double alpha = sweep.at(i);
        const FrameSpec fs{alpha, opt.m};
        const double temp = unruh_temperature(alpha, pc);
        rows[static_cast<std::size_t>(i)] = {alpha, temp, unruh_phase(fs, opt.t, pc),
                                             delta_xi(field, fs, opt.t),
                                             thermal_exponent(opt.m, temp, pc)};
    }

    Sink sink(common.output, out);
    sink.get() << "alpha,T,phase,delta_xi,thermal_exponent\n";
    for (const auto& r : rows) {
        sink.get() << format_double(r.alpha) << "," << format_double(r.T) << ","
                   << format_double(r.phase) << "," << format_double(r.dxi) << ","
                   << format_double(r.thermal) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized complex geometry toolkit for thermodynamic fluctuations", "gcfluct"};
    app.require_subcommand(1);

    CommonOptions common;
    int n = 2;
    AverageOptions avg;
    UnruhOptions unruh;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", common.input, "Input document");
        sub->add_option("--output", common.output, "Write results to this file");
        return sub->add_option("--seed", common.seed, "Random seed");
    };

    auto* verify = app.add_subcommand("verify", "Run the built-in property checks");
    add_common(verify);
    verify->add_option("--n", n, "Fibre half-dimension");

    auto* classify = app.add_subcommand("classify", "Print the type of a structure in a file");
    add_common(classify);

    auto* average = app.add_subcommand("average", "Evaluate an average functional");
    auto* seed_opt = add_common(average);
    average->add_option("--functional", avg.functional, "riemann | symplectic | hermitian");
    average->add_option("--integrand", avg.integrand, "one | T2 | q1 | absz2");
    average->add_option("--scheme", avg.scheme, "tensor-grid | monte-carlo");
    average->add_option("--points", avg.points, "Grid points per axis");

    auto* unruh_cmd = app.add_subcommand("unruh", "Tabulate the accelerated-frame phase chain");
    add_common(unruh_cmd);
    unruh_cmd->add_option("--sweep", unruh.sweep, "Acceleration range start:stop:count");
    unruh_cmd->add_option("--m", unruh.m, "Particle mass");
    unruh_cmd->add_option("--t", unruh.t, "Elapsed time");
    unruh_cmd->add_option("--B", unruh.b_field, "Constant B-field coefficient (number or a/b)");
    unruh_cmd->add_option("--units", unruh.units, "natural | si")
        ->check(CLI::IsMember({"natural", "si"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(n, common, out, err);
        if (classify->parsed()) return cmd_classify(common, out, err);
        if (average->parsed()) return cmd_average(avg, common, seed_opt->count() > 0, out);
        if (unruh_cmd->parsed()) return cmd_unruh(unruh, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace gcfluct
