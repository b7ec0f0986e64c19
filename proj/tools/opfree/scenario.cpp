#include "app.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <opfree/amplify.hpp>
#include <opfree/fock.hpp>
#include <opfree/mcx.hpp>
#include <opfree/ncpart.hpp>
#include <opfree/random.hpp>
#include <opfree/standard_poly.hpp>
#include <opfree/symfock.hpp>
#include <opfree/wick.hpp>

namespace opfree::app {
namespace {

using nlohmann::json;

void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
}

template <typename T>
T get_integer(const json& obj, const std::string& key, T fallback, T lo, T hi, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(where, "\"" + key + "\" must be an integer");
    // every bound used here is non-negative
    const bool negative = !v.is_number_unsigned() && v.get<std::int64_t>() < 0;
    const auto u = negative ? 0 : v.get<std::uint64_t>();
    if (negative || u < static_cast<std::uint64_t>(lo) || u > static_cast<std::uint64_t>(hi))
        fail(where, "\"" + key + "\" out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<T>(u);
}

double get_number(const json& obj, const std::string& key, double fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(where, "\"" + key + "\" must be a number");
    return v.get<double>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& where,
                       const std::optional<std::string>& fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (!fallback) fail(where, "missing field \"" + key + "\"");
        return *fallback;
    }
    if (!obj.at(key).is_string()) fail(where, "\"" + key + "\" must be a string");
    return obj.at(key).get<std::string>();
}

std::string choice(const json& obj, const std::string& key, const std::vector<std::string>& options,
                   const std::string& where, const std::optional<std::string>& fallback = std::nullopt) {
    const std::string v = get_string(obj, key, where, fallback);
    for (const auto& o : options)
        if (o == v) return v;
    std::string list;
    for (const auto& o : options) list += (list.empty() ? "" : ", ") + o;
    fail(where, "\"" + key + "\" must be one of " + list);
    return v;
}

Complex parse_complex(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    fail(where, "matrix entries must be numbers or [re, im] pairs");
    return {};
}

Matrix parse_matrix(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) fail(where, "matrix must be a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(v.size());
    Matrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = v[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) fail(where, "matrix must be square");
        for (Eigen::Index c = 0; c < rows; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], where);
    }
    return m;
}

CovarianceSpec parse_covariance(const json& obj, const std::string& key, const std::string& where,
                                std::optional<int> default_identity = std::nullopt) {
    if (!obj.contains(key)) {
        if (!default_identity) fail(where, "missing field \"" + key + "\"");
        return CovarianceSpec::identity(*default_identity);
    }
    const json& v = obj.at(key);
    const std::string ctx = where + "." + key;
    require_object(v, ctx);
    reject_unknown(v, {"identity", "names", "matrix"}, ctx);
    if (v.contains("identity")) {
        if (v.contains("matrix") || v.contains("names")) fail(ctx, "\"identity\" excludes \"names\" and \"matrix\"");
        return CovarianceSpec::identity(get_integer<int>(v, "identity", 1, 1, 16, ctx));
    }
    if (!v.contains("matrix")) fail(ctx, "needs \"identity\" or \"matrix\"");
    const Matrix m = parse_matrix(v.at("matrix"), ctx);
    if (m.imag().cwiseAbs().maxCoeff() != 0.0) fail(ctx, "covariance must be real");
    std::vector<std::string> names;
    if (v.contains("names")) {
        if (!v.at("names").is_array()) fail(ctx, "\"names\" must be an array of strings");
        for (const auto& n : v.at("names")) {
            if (!n.is_string()) fail(ctx, "\"names\" must be an array of strings");
            names.push_back(n.get<std::string>());
        }
        if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
            fail(ctx, "variable names must be distinct");
    } else {
        for (Eigen::Index i = 0; i < m.rows(); ++i) names.push_back("x" + std::to_string(i + 1));
    }
    try {
        return CovarianceSpec(names, m.real());
    } catch (const InvalidArgument& e) {
        fail(ctx, e.what());
    }
    return CovarianceSpec::identity(1);
}

std::vector<std::vector<int>> parse_words(const json& obj, const CovarianceSpec& spec, const std::string& where) {
    if (!obj.contains("words")) fail(where, "missing field \"words\"");
    const json& v = obj.at("words");
    if (!v.is_array() || v.empty()) fail(where, "\"words\" must be a non-empty array");
    std::map<std::string, int> by_name;
    for (int i = 0; i < spec.size(); ++i) by_name[spec.names()[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<int>> out;
    for (const auto& w : v) {
        if (!w.is_array()) fail(where, "each word must be an array of variable names or indices");
        std::vector<int> word;
        for (const auto& letter : w) {
            if (letter.is_string()) {
                auto it = by_name.find(letter.get<std::string>());
                if (it == by_name.end()) fail(where, "unknown variable \"" + letter.get<std::string>() + "\"");
                word.push_back(it->second);
            } else if (letter.is_number_integer() && letter.get<std::int64_t>() >= 0 &&
                       letter.get<std::int64_t>() < spec.size()) {
                word.push_back(letter.get<int>());
            } else {
                fail(where, "word letters must be variable names or 0-based indices in range");
            }
        }
        if (static_cast<int>(word.size()) > kMaxWickLength)
            fail(where, "word longer than " + std::to_string(kMaxWickLength));
        out.push_back(std::move(word));
    }
    return out;
}

std::string render_word(const std::vector<int>& word, const CovarianceSpec& spec) {
    if (word.empty()) return "1";
    std::string s;
    for (int i : word) s += (s.empty() ? "" : " ") + spec.names()[static_cast<std::size_t>(i)];
    return s;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

CheckRecord defect_check(std::string name, std::string inputs, double defect, double tol, std::string note) {
    auto rec = bound_check(std::move(name), std::move(inputs), defect, tol);
    rec.note = std::move(note);
    return rec;
}

// ---- kinds --------------------------------------------------------------

Report run_partitions(const json& s, Environment& env) {
    const std::string where = "partitions";
    reject_unknown(s, {"schema_version", "kind", "name", "n", "type", "list"}, where);
    const std::string type = choice(s, "type", {"nc", "ncpp", "pairings", "all"}, where);
    const int limit = (type == "ncpp" || type == "pairings") ? kMaxPairingSize : kMaxPartitionSize;
    const int n = get_integer<int>(s, "n", 0, 1, limit, where);
    if (!s.contains("n")) fail(where, "missing field \"n\"");
    bool list = false;
    if (s.contains("list")) {
        if (!s.at("list").is_boolean()) fail(where, "\"list\" must be a boolean");
        list = s.at("list").get<bool>();
    }
    env.depth.reset();

    Report report;
    report.suite = "partitions";
    const std::string inputs = "partitions type=" + type + " n=" + std::to_string(n);
    std::vector<std::string> rendered;
    std::uint64_t closed = 0;
    std::size_t filtered = 0;
    bool has_filter = true;
    if (type == "nc") {
        for (const auto& p : enumerate_nc(n)) rendered.push_back(p.to_string());
        for (const auto& p : enumerate_set_partitions(n)) filtered += is_noncrossing(p);
        closed = catalan(n);
    } else if (type == "ncpp") {
        for (const auto& p : enumerate_ncpp(n)) rendered.push_back(p.to_string());
        for (const auto& p : enumerate_pairings(n)) filtered += is_noncrossing(p);
        closed = n % 2 ? 0 : catalan(n / 2);
    } else if (type == "pairings") {
        for (const auto& p : enumerate_pairings(n)) rendered.push_back(p.to_string());
        closed = pairing_count(n);
        has_filter = false;
    } else {
        for (const auto& p : enumerate_set_partitions(n)) rendered.push_back(p.to_string());
        closed = bell(n);
        has_filter = false;
    }
    const auto count = static_cast<double>(rendered.size());
    report.add(defect_check("count equals closed form", inputs, std::abs(count - static_cast<double>(closed)), 0.0,
                            "generated " + std::to_string(rendered.size()) + ", closed form " + std::to_string(closed)));
    if (has_filter)
        report.add(defect_check("direct generation equals filtered enumeration", inputs,
                                std::abs(count - static_cast<double>(filtered)), 0.0,
                                "filtered " + std::to_string(filtered)));
    if (list) report.observations = rendered;
    return report;
}

Report run_moments(const json& s, Environment& env) {
    const std::string where = "moments";
    reject_unknown(s, {"schema_version", "kind", "name", "covariance", "words", "law", "tolerance"}, where);
    const auto spec = parse_covariance(s, "covariance", where);
    const auto words = parse_words(s, spec, where);
    const std::string law = choice(s, "law", {"free", "classical"}, where, std::string("free"));
    env.depth.reset();

    Report report;
    report.suite = "moments";
    for (const auto& w : words) {
        const double closed = law == "free" ? free_wick_moment(w, spec) : classical_wick_moment(w, spec);
        // Independent route: enumerate the pairings explicitly and sum covariance products.
        double enumerated = w.empty() ? 1.0 : 0.0;
        if (!w.empty() && w.size() % 2 == 0) {
            const int n = static_cast<int>(w.size());
            std::vector<SetPartition> pairings;
            if (law == "free")
                for (const auto& p : enumerate_ncpp(n)) pairings.push_back(p.base());
            else
                pairings = enumerate_pairings(n);
            for (const auto& p : pairings) {
                double term = 1.0;
                for (const auto& b : p.blocks())
                    term *= spec(w[static_cast<std::size_t>(b[0])], w[static_cast<std::size_t>(b[1])]);
                enumerated += term;
            }
        }
        const std::string word = render_word(w, spec);
        report.add(defect_check("phi(" + word + ")", "moments law=" + law + " word=" + word,
                                std::abs(closed - enumerated), env.tolerance, "moment = " + fmt(closed)));
    }
    return report;
}

Report run_cumulants(const json& s, Environment& env) {
    const std::string where = "cumulants";
    reject_unknown(s, {"schema_version", "kind", "name", "moments", "expected", "tolerance"}, where);
    auto read_list = [&](const std::string& key) {
        const json& v = s.at(key);
        if (!v.is_array() || v.empty()) fail(where, "\"" + key + "\" must be a non-empty array of numbers");
        std::vector<double> out;
        for (const auto& x : v) {
            if (!x.is_number()) fail(where, "\"" + key + "\" must be a non-empty array of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    };
    if (!s.contains("moments")) fail(where, "missing field \"moments\"");
    const auto moments = read_list("moments");
    if (static_cast<int>(moments.size()) > kMaxPartitionSize)
        fail(where, "at most " + std::to_string(kMaxPartitionSize) + " moments");
    std::optional<std::vector<double>> expected;
    if (s.contains("expected")) {
        expected = read_list("expected");
        if (expected->size() != moments.size()) fail(where, "\"expected\" must match \"moments\" in length");
    }
    env.depth.reset();

    const MomentSource source{1, [&moments](const OpWord& w) {
                                  Complex factor = 1.0;
                                  for (std::size_t i = 1; i < w.length(); ++i) factor *= w.coeff_before(i)(0, 0);
                                  return scalar_matrix(factor * moments[w.length() - 1]);
                              }};
    std::vector<double> cumulants;
    for (std::size_t n = 1; n <= moments.size(); ++n)
        cumulants.push_back(moments_to_cumulants(OpWord::plain(1, std::vector<int>(n, 0)), source)(0, 0).real());
    const CumulantFn back = [&cumulants](const OpWord& w) {
        Complex factor = 1.0;
        for (std::size_t i = 1; i < w.length(); ++i) factor *= w.coeff_before(i)(0, 0);
        return scalar_matrix(factor * cumulants[w.length() - 1]);
    };

    Report report;
    report.suite = "cumulants";
    for (std::size_t n = 1; n <= moments.size(); ++n) {
        const std::string inputs = "cumulants order=" + std::to_string(n);
        const std::string note = "k_" + std::to_string(n) + " = " + fmt(cumulants[n - 1]);
        if (expected) {
            report.add(defect_check("k_" + std::to_string(n) + " equals expected", inputs,
                                    std::abs(cumulants[n - 1] - (*expected)[n - 1]), env.tolerance, note));
        } else {
            const double m = cumulants_to_moments(OpWord::plain(1, std::vector<int>(n, 0)), back)(0, 0).real();
            report.add(defect_check("m_" + std::to_string(n) + " recovered from cumulants", inputs,
                                    std::abs(m - moments[n - 1]), env.tolerance, note));
        }
    }
    return report;
}

Report run_fock(const json& s, Environment& env) {
    const std::string where = "fock";
    reject_unknown(s, {"schema_version", "kind", "name", "covariance", "words", "model", "depth", "tolerance"}, where);
    const auto spec = parse_covariance(s, "covariance", where);
    const auto words = parse_words(s, spec, where);
    const std::string model = choice(s, "model", {"free", "bosonic"}, where, std::string("free"));
    std::size_t longest = 0;
    for (const auto& w : words) longest = std::max(longest, w.size());
    if (!env.depth) env.depth = static_cast<int>(longest) + 1;
    if (*env.depth < static_cast<int>(longest))
        fail(where, "depth " + std::to_string(*env.depth) + " is below the longest word length " +
                        std::to_string(longest));
    const auto family = model == "free" ? semicircular_family(spec.cov(), *env.depth)
                                        : gaussian_family(spec.cov(), *env.depth);

    Report report;
    report.suite = "fock";
    for (const auto& w : words) {
        std::complex<double> fock_value = 1.0;
        if (!w.empty()) {
            std::vector<FockOperator> ops;
            for (int i : w) ops.push_back(family[static_cast<std::size_t>(i)]);
            fock_value = vacuum_expectation(ops);
        }
        const double wick = model == "free" ? free_wick_moment(w, spec) : classical_wick_moment(w, spec);
        const std::string word = render_word(w, spec);
        report.add(defect_check("<Omega, " + word + " Omega>",
                                "fock model=" + model + " depth=" + std::to_string(*env.depth) + " word=" + word,
                                std::abs(fock_value - wick), env.tolerance,
                                "vacuum expectation = " + fmt(fock_value.real()) + ", pairing sum = " + fmt(wick)));
    }
    return report;
}

// ---- verify suites ------------------------------------------------------

TrialConfig trial_config(const Environment& env) { return {env.trials, env.seed, env.tolerance}; }

Report suite_prop32(const json& s, Environment& env) {
    const std::string where = "verify prop32";
    reject_unknown(s, {"generators", "coeff_dim", "p_max"}, where);
    const int gens = get_integer<int>(s, "generators", 3, 1, 6, where);
    const auto k = get_integer<std::size_t>(s, "coeff_dim", 2, 1, 4, where);
    const int p_max = get_integer<int>(s, "p_max", 4, 0, 6, where);
    env.depth = p_max + 1;
    return verify_amplified_semicircularity(CovarianceSpec::identity(gens), k, p_max, trial_config(env));
}

Report suite_thm1_forward(const json& s, Environment& env) {
    const std::string where = "verify thm1-forward";
    reject_unknown(s, {"covariance", "coeff_dim", "p_max"}, where);
    const auto cov = parse_covariance(s, "covariance", where, 2);
    const auto k = get_integer<std::size_t>(s, "coeff_dim", 3, 1, 4, where);
    const int p_max = get_integer<int>(s, "p_max", 4, 0, 6, where);
    env.depth = p_max + 1;
    return verify_amplified_semicircularity(cov, k, p_max, trial_config(env));
}

Report suite_thm1_converse(const json& s, Environment& env) {
    const std::string where = "verify thm1-converse";
    reject_unknown(s, {"order", "relative_threshold"}, where);
    DetectionOptions opts;
    opts.order = get_integer<int>(s, "order", 2, 1, 4, where);
    opts.relative_threshold = get_number(s, "relative_threshold", 0.5, where);
    if (!(opts.relative_threshold > 0.0)) fail(where, "\"relative_threshold\" must be positive");
    // s^2 has degree 2, so a word of order+1 copies needs twice that depth.
    env.depth = 2 * (opts.order + 1);
    FreeFockBasis basis(1, *env.depth);
    const auto s1 = gaussian_free(Eigen::VectorXd::Ones(1), basis);
    Report report;
    report.suite = "thm1-converse";
    report.merge(detect_nonsemicircular({s1 * s1}, opts, trial_config(env)), "square of a semicircular: ");
    const Report control = detect_nonsemicircular({s1}, opts, trial_config(env));
    const CheckRecord& hits = control.checks.front();
    CheckRecord rec;
    rec.name = "semicircular control: detections";
    rec.inputs = hits.inputs;
    rec.value = hits.value;
    rec.threshold = 0.0;
    rec.status = hits.value == 0.0 ? Status::Pass : Status::Fail;
    rec.note = "a semicircular element must never be flagged; " + hits.note;
    report.add(rec);
    return report;
}

Report suite_def42(const json& s, Environment& env) {
    const std::string where = "verify def42";
    reject_unknown(s, {"max_length", "variance"}, where);
    const int len = get_integer<int>(s, "max_length", 6, 1, 8, where);
    const double variance = get_number(s, "variance", 1.0, where);
    if (!(variance > 0.0)) fail(where, "\"variance\" must be positive");
    env.depth = len;
    Report r = verify_circular_star_moments(len, variance, env.tolerance);
    r.suite = "def42";
    return r;
}

Report suite_cor43(const json& s, Environment& env) {
    const std::string where = "verify cor43";
    reject_unknown(s, {"coeff_dim", "p_max"}, where);
    const auto k = get_integer<std::size_t>(s, "coeff_dim", 2, 1, 4, where);
    const int p_max = get_integer<int>(s, "p_max", 4, 0, 6, where);
    env.depth = p_max + 1;
    return complex_semicircular_check(standard_circular(*env.depth), k, p_max, trial_config(env));
}

Report suite_thm2_chain(const json& s, Environment& env) {
    const std::string where = "verify thm2-chain";
    reject_unknown(s, {"covariance", "max_length", "coeff_dim"}, where);
    const auto cov = parse_covariance(s, "covariance", where, 2);
    const int len = get_integer<int>(s, "max_length", 4, 1, 6, where);
    const auto k = get_integer<std::size_t>(s, "coeff_dim", 3, 1, 4, where);
    env.depth = len;
    return verify_amplified_wick_chain(cov, len, k, trial_config(env));
}

Report suite_al(const json& s, Environment& env) {
    const std::string where = "verify al";
    reject_unknown(s, {"n"}, where);
    const int n = get_integer<int>(s, "n", 2, 1, kMaxStandardDegree / 2, where);
    env.depth.reset();
    Report report = verify_al_vanishing(n, env.trials, env.seed, env.tolerance);
    report.suite = "al";
    const auto witness = find_nonvanishing_witness(n);
    CheckRecord rec;
    rec.name = "s_" + std::to_string(2 * n - 1) + " has a matrix-unit witness on M_" + std::to_string(n);
    rec.inputs = "witness search n=" + std::to_string(n);
    rec.threshold = 0.5;
    if (witness) {
        rec.value = max_abs(standard_polynomial(witness->args));
        rec.status = Status::Pass;
        std::ostringstream os;
        os << "witness:";
        for (const auto& m : witness->args)
            for (Eigen::Index r = 0; r < m.rows(); ++r)
                for (Eigen::Index c = 0; c < m.cols(); ++c)
                    if (m(r, c) != Complex(0.0)) os << " E" << r + 1 << c + 1;
        rec.note = os.str();
    } else {
        rec.status = Status::Fail;
        rec.note = "no witness among distinct matrix units";
    }
    report.add(rec);
    return report;
}

Report suite_symfock(const json& s, Environment& env) {
    const std::string where = "verify symfock";
    reject_unknown(s, {"n", "m", "a"}, where);
    const int n = get_integer<int>(s, "n", 3, 2, kMaxSymmetrizationLength, where);
    const int m = get_integer<int>(s, "m", 2, 1, 4, where);
    Matrix a;
    if (s.contains("a")) {
        a = parse_matrix(s.at("a"), where + ".a");
        if (a.rows() != m) fail(where, "\"a\" must be m x m");
    } else {
        auto rng = trial_stream(env.seed, 0);
        a = random_complex(static_cast<std::size_t>(m), rng);
    }
    env.depth.reset();
    return verify_symmetrization(n, m, a);
}

using SuiteFn = Report (*)(const json&, Environment&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"prop32", suite_prop32},       {"thm1-forward", suite_thm1_forward}, {"thm1-converse", suite_thm1_converse},
        {"def42", suite_def42},         {"cor43", suite_cor43},               {"thm2-chain", suite_thm2_chain},
        {"al", suite_al},               {"symfock", suite_symfock}};
    return table;
}

Report run_verify(const json& s, Environment& env, std::string& name) {
    const std::string where = "verify";
    reject_unknown(s, {"schema_version", "kind", "name", "suite", "params", "seed", "trials", "tolerance"}, where);
    name = get_string(s, "suite", where);
    json params = json::object();
    if (s.contains("params")) {
        params = s.at("params");
        require_object(params, where + ".params");
    }
    for (const auto& [id, fn] : suite_table())
        if (id == name) {
            Report r = fn(params, env);
            r.suite = name;
            return r;
        }
    std::string list;
    for (const auto& id : suite_ids()) list += (list.empty() ? "" : ", ") + id;
    fail(where, "unknown suite \"" + name + "\" (expected one of " + list + ")");
    return {};
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : suite_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

nlohmann::json load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read scenario file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": malformed JSON: " + e.what());
    }
}

RunResult run_scenario(const nlohmann::json& s, const RunOptions& options) {
    require_object(s, "scenario");
    if (s.contains("schema_version") &&
        (!s.at("schema_version").is_number_integer() || s.at("schema_version").get<int>() != kSchemaVersion))
        fail("scenario", "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");

    RunResult result;
    result.kind = choice(s, "kind", {"partitions", "moments", "cumulants", "fock", "verify"}, "scenario");
    result.name = get_string(s, "name", "scenario", result.kind);
    Environment& env = result.environment;
    env.seed = options.seed.value_or(get_integer<std::uint64_t>(s, "seed", 0, 0, UINT64_MAX, "scenario"));
    env.trials = options.trials.value_or(get_integer<std::size_t>(s, "trials", 50, 0, 100000, "scenario"));
    env.tolerance = options.tolerance.value_or(get_number(s, "tolerance", kDefaultTolerance, "scenario"));
    if (!(env.tolerance >= 0.0)) fail("scenario", "tolerance must be non-negative");
    if (s.contains("depth")) env.depth = get_integer<int>(s, "depth", 0, 0, 16, "scenario");
    if (options.depth) env.depth = *options.depth;

    const auto start = std::chrono::steady_clock::now();
    try {
        if (result.kind == "partitions")
            result.report = run_partitions(s, env);
        else if (result.kind == "moments")
            result.report = run_moments(s, env);
        else if (result.kind == "cumulants")
            result.report = run_cumulants(s, env);
        else if (result.kind == "fock")
            result.report = run_fock(s, env);
        else
            result.report = run_verify(s, env, result.name);
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        // Size guards and invalid parameters surface as schema violations of the scenario.
        throw SchemaError(result.kind + ": " + e.what());
    }
    result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace opfree::app
