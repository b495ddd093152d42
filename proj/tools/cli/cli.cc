#include "cli.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homlab/detector.h"
#include "homlab/dicke.h"
#include "homlab/nodal.h"
#include "homlab/states.h"
#include "json.hpp"

#ifndef HOMLAB_VERSION
#define HOMLAB_VERSION "dev"
#endif

namespace homlab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Tags an exception with the flag (or config key) it came from.
template <typename Fn>
auto for_flag(const char *flag, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const TruncationError &e) {
        throw std::domain_error(std::string(flag) + ": " + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    } catch (const std::domain_error &e) {
        throw std::domain_error(std::string(flag) + ": " + e.what());
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json big_int_json(const BigInt &v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

ordered_json bs_json(const BeamSplitterSetting &bs) {
    ordered_json j = ordered_json::object();
    if (bs.is_exact()) {
        j["T_num"] = big_int_json(bs.exact_transmittance().numerator());
        j["T_den"] = big_int_json(bs.exact_transmittance().denominator());
    } else {
        j["theta"] = bs.theta();
    }
    return j;
}

template <typename T>
ordered_json optional_json(const std::optional<T> &v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

enum class Format { Json, Csv };

Format format_of(const RunConfig &c) {
    const std::string f = c.format.value_or("json");
    if (f == "json") {
        return Format::Json;
    }
    if (f == "csv") {
        return Format::Csv;
    }
    throw std::invalid_argument("--format: expected 'json' or 'csv', got '" + f + "'");
}

template <typename T>
T need(const std::optional<T> &v, const char *flag) {
    if (!v) {
        throw std::invalid_argument(std::string("missing required option ") + flag);
    }
    return *v;
}

BigRational exact_transmittance(const RunConfig &c) {
    const auto bs = for_flag("--T", [&] { return parse_bs(c.bs.value_or("1/2")); });
    if (!bs.is_exact()) {
        throw std::invalid_argument("--T: this command needs an exact rational transmittance");
    }
    return bs.exact_transmittance();
}

void emit(const RunConfig &c, std::ostream &out, const std::string &text) {
    if (c.output) {
        write_atomically(*c.output, text);
    } else {
        out << text;
    }
}

State load_state(const std::optional<std::string> &text, const char *flag) {
    return for_flag(flag, [&] { return build_state(parse_state_descriptor(need(text, flag))); });
}

JointDistribution compute_distribution(const RunConfig &c) {
    const State a = load_state(c.state_a, "--a");
    const State b = load_state(c.state_b, "--b");
    const auto bs = for_flag("--bs", [&] { return parse_bs(c.bs.value_or("1/2")); });
    if (c.grid_max && *c.grid_max < 0) {
        throw std::domain_error("--grid-max: must be non-negative");
    }
    return joint_distribution(a, b, bs, c.grid_max);
}

std::string render_distribution(const JointDistribution &dist, const RunConfig &c) {
    return format_of(c) == Format::Json ? distribution_json(dist, c) : distribution_csv(dist);
}

int cmd_dist(const RunConfig &c, std::ostream &out) {
    format_of(c);
    emit(c, out, render_distribution(compute_distribution(c), c));
    return kOk;
}

int cmd_lossy(RunConfig c, std::ostream &out) {
    format_of(c);
    const auto clean = compute_distribution(c);
    LossConfig loss;
    loss.eta_a = c.eta_a.value_or(c.eta.value_or(1.0));
    loss.eta_b = c.eta_b.value_or(c.eta.value_or(1.0));
    loss.source_max = c.source_max;
    c.eta_a = loss.eta_a;
    c.eta_b = loss.eta_b;
    const auto lossy = for_flag("--eta", [&] { return lossy_distribution(clean, loss); });
    emit(c, out, render_distribution(lossy, c));
    return kOk;
}

int cmd_zeros(const RunConfig &c, std::ostream &out) {
    const Format format = format_of(c);
    const int n = need(c.n, "--n");
    const auto t = exact_transmittance(c);
    const auto set = bfs_zeros(n, t, need(c.m_max, "--max"), c.m_a_min.value_or(0));
    std::string text;
    if (format == Format::Json) {
        ordered_json j;
        j["meta"] = {{"command", "zeros"},
                     {"n", n},
                     {"T", {{"T_num", big_int_json(t.numerator())}, {"T_den", big_int_json(t.denominator())}}},
                     {"m_max", set.m_max},
                     {"m_a_min", set.m_a_min},
                     {"tool_version", HOMLAB_VERSION}};
        j["zeros"] = ordered_json::array();
        for (const auto &z : set.zeros) {
            j["zeros"].push_back({{"m_a", z.m_a}, {"m_b", z.m_b}, {"physical", z.physical}});
        }
        j["count"] = set.zeros.size();
        text = j.dump(2) + "\n";
    } else {
        text = "m_a,m_b,physical\n";
        for (const auto &z : set.zeros) {
            text += std::to_string(z.m_a) + "," + std::to_string(z.m_b) + "," + (z.physical ? "1" : "0") + "\n";
        }
    }
    emit(c, out, text);
    return kOk;
}

std::string join(const std::vector<std::int64_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

int cmd_parametric(const RunConfig &c, std::ostream &out) {
    const Format format = format_of(c);
    const int n = need(c.n, "--n");
    const auto t = exact_transmittance(c);
    const int degree = c.degree.value_or(2);
    const auto lo = need(c.lo, "--lo");
    const auto hi = need(c.hi, "--hi");
    const auto found = for_flag("--degree", [&] { return search_parametric(n, t, degree, lo, hi); });
    std::string text;
    if (format == Format::Json) {
        ordered_json j;
        j["meta"] = {{"command", "parametric"},
                     {"n", n},
                     {"T", {{"T_num", big_int_json(t.numerator())}, {"T_den", big_int_json(t.denominator())}}},
                     {"degree", degree},
                     {"lo", lo},
                     {"hi", hi},
                     {"tool_version", HOMLAB_VERSION}};
        j["solutions"] = ordered_json::array();
        for (const auto &s : found) {
            j["solutions"].push_back({{"a", s.a_coeffs}, {"b", s.b_coeffs}, {"family", s.str()}});
        }
        j["count"] = found.size();
        text = j.dump(2) + "\n";
    } else {
        text = "a,b,family\n";
        for (const auto &s : found) {
            text += join(s.a_coeffs) + "," + join(s.b_coeffs) + ",\"" + s.str() + "\"\n";
        }
    }
    emit(c, out, text);
    return kOk;
}

int cmd_herald(const RunConfig &c, std::ostream &out) {
    const Format format = format_of(c);
    const int t = need(c.t, "--t");
    const int n_prime = c.n_prime.value_or(t);
    const double eta = need(c.eta, "--eta");
    const double r = need(c.r, "--r");
    const auto source = for_flag("--r", [&] { return squeezed_source(r, c.cutoff); });
    const double posterior = for_flag("--eta", [&] { return herald_posterior(n_prime, t, eta, source); });
    std::string text;
    if (format == Format::Json) {
        ordered_json j;
        j["meta"] = {{"command", "herald"}, {"t", t},           {"n_prime", n_prime},
                     {"eta", eta},          {"r", r},           {"cutoff", source.cutoff},
                     {"tool_version", HOMLAB_VERSION}};
        j["posterior"] = posterior;
        j["detection_prob"] = spdc_detection_prob(t, eta, source);
        j["tail_bound"] = source.tail_mass();
        j["squeezing_db"] = squeezing_db(r);
        ordered_json dist = ordered_json::array();
        for (int k = t; k <= source.cutoff; ++k) {
            dist.push_back({{"n_prime", k}, {"posterior", herald_posterior(k, t, eta, source)}});
        }
        j["distribution"] = dist;
        text = j.dump(2) + "\n";
    } else {
        text = "n_prime,posterior\n";
        for (int k = t; k <= source.cutoff; ++k) {
            text += std::to_string(k) + "," + format_double(herald_posterior(k, t, eta, source)) + "\n";
        }
    }
    emit(c, out, text);
    return kOk;
}

int cmd_dicke(const RunConfig &c, std::ostream &out) {
    const Format format = format_of(c);
    const auto bs = for_flag("--bs", [&] { return parse_bs(c.bs.value_or("1/2")); });
    const int j_min = c.j_min.value_or(0);
    const int j_max = c.j_max.value_or(10);
    const auto rows = for_flag("--j-max", [&] { return atomic_cnl_sweep(j_min, j_max, bs); });
    std::string text;
    if (format == Format::Json) {
        ordered_json j;
        j["meta"] = {{"command", "dicke"},
                     {"j_min", j_min},
                     {"j_max", j_max},
                     {"bs", bs_json(bs)},
                     {"tool_version", HOMLAB_VERSION}};
        j["rows"] = ordered_json::array();
        for (const auto &row : rows) {
            j["rows"].push_back({{"J", row.two_j / 2},
                                 {"M", row.two_m / 2},
                                 {"n", row.fock.n},
                                 {"m", row.fock.m},
                                 {"p_center", row.p_center}});
        }
        text = j.dump(2) + "\n";
    } else {
        text = "J,M,n,m,P_center\n";
        for (const auto &row : rows) {
            text += std::to_string(row.two_j / 2) + "," + std::to_string(row.two_m / 2) + "," +
                    std::to_string(row.fock.n) + "," + std::to_string(row.fock.m) + "," +
                    format_double(row.p_center) + "\n";
        }
    }
    emit(c, out, text);
    return kOk;
}

int cmd_verify(const RunConfig &c, std::ostream &out) {
    const Format format = format_of(c);
    const std::string tables = c.tables.value_or("appendix-c");
    if (tables != "appendix-c") {
        throw std::invalid_argument("--tables: only 'appendix-c' is available");
    }
    ordered_json rows = ordered_json::array();
    std::string csv = "table,row,family,n,T,valid,certificates_agree\n";
    int valid = 0;
    int total = 0;
    for (const auto &row : appendix_c_tables()) {
        const auto verdict = verify_parametric(row.solution);
        ++total;
        valid += verdict.valid ? 1 : 0;
        ordered_json entry = {{"table", row.table},
                              {"row", row.row},
                              {"family", row.solution.str()},
                              {"n", row.solution.n},
                              {"T", row.solution.transmittance.str()},
                              {"valid", verdict.valid},
                              {"certificates_agree", verdict.certificates_agree}};
        if (verdict.first_nonzero) {
            entry["first_nonzero"] = {{"degree", verdict.first_nonzero->first},
                                      {"value", verdict.first_nonzero->second.str()}};
        } else {
            entry["first_nonzero"] = nullptr;
        }
        rows.push_back(entry);
        csv += row.table + "," + std::to_string(row.row) + ",\"" + row.solution.str() + "\"," +
               std::to_string(row.solution.n) + "," + row.solution.transmittance.str() + "," +
               (verdict.valid ? "1" : "0") + "," + (verdict.certificates_agree ? "1" : "0") + "\n";
    }
    if (format == Format::Json) {
        ordered_json j;
        j["meta"] = {{"command", "verify"}, {"tables", tables}, {"tool_version", HOMLAB_VERSION}};
        j["rows"] = rows;
        j["valid_count"] = valid;
        j["total"] = total;
        emit(c, out, j.dump(2) + "\n");
    } else {
        emit(c, out, csv);
    }
    return valid == total ? kOk : kVerificationFailed;
}

template <typename T>
void set_from(const ordered_json &j, const char *key, std::optional<T> &target) {
    if (!j.contains(key)) {
        return;
    }
    try {
        target = j.at(key).get<T>();
    } catch (const nlohmann::json::exception &) {
        throw std::invalid_argument(std::string("config key '") + key + "' has the wrong type");
    }
}

template <typename T>
void add_flag(CLI::App *app, const std::string &name, std::optional<T> &target, const std::string &help) {
    app->add_option_function<T>(name, [&target](const T &v) { target = v; }, help);
}

void add_state_options(CLI::App *sub, RunConfig &f) {
    add_flag(sub, "--a", f.state_a, "a-mode input state, e.g. fock:1");
    add_flag(sub, "--b", f.state_b, "b-mode input state, e.g. coherent:beta=3");
    add_flag(sub, "--bs", f.bs, "transmittance T (\"1/2\", \"0.75\") or \"theta=<radians>\"");
    add_flag(sub, "--grid-max", f.grid_max, "largest photon number on each axis");
}

}  // namespace

BeamSplitterSetting parse_bs(std::string_view text) {
    if (text.rfind("theta=", 0) == 0) {
        const std::string value(text.substr(6));
        std::size_t used = 0;
        double theta = 0.0;
        try {
            theta = std::stod(value, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != value.size()) {
            throw std::invalid_argument("bad angle '" + value + "'");
        }
        return BeamSplitterSetting::angle(theta);
    }
    if (text.rfind("T=", 0) == 0) {
        text.remove_prefix(2);
    }
    return BeamSplitterSetting::exact(BigRational::parse(text));
}

RunConfig parse_config_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config: top level must be an object");
    }
    static const char *const kKeys[] = {"command", "state_a", "state_b", "bs",     "grid_max", "eta_a",  "eta_b",
                                        "source_max", "output", "format", "n",     "m_max",    "m_a_min", "degree",
                                        "lo",      "hi",      "t",      "n_prime", "eta",     "r",      "cutoff",
                                        "j_min",   "j_max",   "tables"};
    for (const auto &item : j.items()) {
        bool known = false;
        for (const char *k : kKeys) {
            known = known || item.key() == k;
        }
        if (!known) {
            throw std::invalid_argument("config: unknown key '" + item.key() + "'");
        }
    }
    RunConfig c;
    set_from(j, "command", c.command);
    set_from(j, "state_a", c.state_a);
    set_from(j, "state_b", c.state_b);
    set_from(j, "bs", c.bs);
    set_from(j, "grid_max", c.grid_max);
    set_from(j, "eta_a", c.eta_a);
    set_from(j, "eta_b", c.eta_b);
    set_from(j, "source_max", c.source_max);
    set_from(j, "output", c.output);
    set_from(j, "format", c.format);
    set_from(j, "n", c.n);
    set_from(j, "m_max", c.m_max);
    set_from(j, "m_a_min", c.m_a_min);
    set_from(j, "degree", c.degree);
    set_from(j, "lo", c.lo);
    set_from(j, "hi", c.hi);
    set_from(j, "t", c.t);
    set_from(j, "n_prime", c.n_prime);
    set_from(j, "eta", c.eta);
    set_from(j, "r", c.r);
    set_from(j, "cutoff", c.cutoff);
    set_from(j, "j_min", c.j_min);
    set_from(j, "j_max", c.j_max);
    set_from(j, "tables", c.tables);
    return c;
}

void merge_config(RunConfig &base, const RunConfig &o) {
    auto take = [](auto &dst, const auto &src) {
        if (src) {
            dst = src;
        }
    };
    take(base.command, o.command);
    take(base.state_a, o.state_a);
    take(base.state_b, o.state_b);
    take(base.bs, o.bs);
    take(base.grid_max, o.grid_max);
    take(base.eta_a, o.eta_a);
    take(base.eta_b, o.eta_b);
    take(base.source_max, o.source_max);
    take(base.output, o.output);
    take(base.format, o.format);
    take(base.n, o.n);
    take(base.m_max, o.m_max);
    take(base.m_a_min, o.m_a_min);
    take(base.degree, o.degree);
    take(base.lo, o.lo);
    take(base.hi, o.hi);
    take(base.t, o.t);
    take(base.n_prime, o.n_prime);
    take(base.eta, o.eta);
    take(base.r, o.r);
    take(base.cutoff, o.cutoff);
    take(base.j_min, o.j_min);
    take(base.j_max, o.j_max);
    take(base.tables, o.tables);
}

std::string distribution_json(const JointDistribution &dist, const RunConfig &c) {
    ordered_json j;
    j["meta"] = {{"command", c.command.value_or("dist")},
                 {"state_a", optional_json(c.state_a)},
                 {"state_b", optional_json(c.state_b)},
                 {"bs", bs_json(dist.bs)},
                 {"grid_max", dist.grid_max},
                 {"eta_a", optional_json(c.eta_a)},
                 {"eta_b", optional_json(c.eta_b)},
                 {"tool_version", HOMLAB_VERSION}};
    ordered_json grid = ordered_json::array();
    for (int a = 0; a <= dist.grid_max; ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b <= dist.grid_max; ++b) {
            row.push_back(dist.at(a, b));
        }
        grid.push_back(std::move(row));
    }
    j["grid"] = std::move(grid);
    j["total_mass"] = dist.total_mass;
    const auto scan = cnl_scan(dist);
    j["diagnostics"] = {{"tail_deficit", dist.tail_deficit},
                        {"cnl_verdict", scan.cnl},
                        {"input_label", dist.input_label},
                        {"warnings", dist.warnings}};
    return j.dump() + "\n";
}

std::string distribution_csv(const JointDistribution &dist) {
    std::string text = "m_a,m_b,P\n";
    for (int a = 0; a <= dist.grid_max; ++a) {
        for (int b = 0; b <= dist.grid_max; ++b) {
            text += std::to_string(a) + "," + std::to_string(b) + "," + format_double(dist.at(a, b)) + "\n";
        }
    }
    return text;
}

JointDistribution read_distribution_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("distribution: ") + e.what());
    }
    JointDistribution d;
    try {
        d.grid_max = j.at("meta").at("grid_max").get<int>();
        const auto &bs = j.at("meta").at("bs");
        if (bs.contains("theta")) {
            d.bs = BeamSplitterSetting::angle(bs.at("theta").get<double>());
        } else {
            const auto num = bs.at("T_num");
            const auto den = bs.at("T_den");
            auto big = [](const ordered_json &v) {
                return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long>());
            };
            d.bs = BeamSplitterSetting::exact(BigRational(big(num), big(den)));
        }
        const auto &grid = j.at("grid");
        const auto side = static_cast<std::size_t>(d.grid_max) + 1;
        if (grid.size() != side) {
            throw std::invalid_argument("distribution: grid size does not match grid_max");
        }
        for (const auto &row : grid) {
            if (row.size() != side) {
                throw std::invalid_argument("distribution: ragged grid");
            }
            for (const auto &v : row) {
                d.grid.push_back(v.get<double>());
            }
        }
        d.total_mass = j.at("total_mass").get<double>();
        d.tail_deficit = j.at("diagnostics").at("tail_deficit").get<double>();
        d.input_label = j.at("diagnostics").value("input_label", "");
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("distribution: ") + e.what());
    }
    return d;
}

void write_atomically(const std::string &path, std::string_view contents) {
    namespace fs = std::filesystem;
    const std::string temp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::ios_base::failure("cannot open '" + temp + "' for writing");
        }
        file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        file.close();
        if (!file) {
            std::error_code ignored;
            fs::remove(temp, ignored);
            throw std::ios_base::failure("failed writing '" + temp + "'");
        }
    }
    std::error_code ec;
    fs::rename(temp, path, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw std::ios_base::failure("cannot move output into place at '" + path + "'");
    }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Beam-splitter photon-number distributions and interference zeros"};
    app.set_version_flag("--version", HOMLAB_VERSION);
    app.require_subcommand(0, 1);
    app.fallthrough();

    RunConfig flags;
    std::optional<std::string> config_path;
    add_flag(&app, "--config", config_path, "JSON file with default settings; flags override it");
    add_flag(&app, "-o,--output", flags.output, "write results here instead of stdout");
    add_flag(&app, "--format", flags.format, "json (default) or csv");

    auto *dist = app.add_subcommand("dist", "joint output distribution P(m_a, m_b)");
    add_state_options(dist, flags);

    auto *lossy = app.add_subcommand("lossy", "distribution seen by lossy number-resolving detectors");
    add_state_options(lossy, flags);
    add_flag(lossy, "--eta", flags.eta, "efficiency for both detectors");
    add_flag(lossy, "--eta-a", flags.eta_a, "a-mode detector efficiency");
    add_flag(lossy, "--eta-b", flags.eta_b, "b-mode detector efficiency");
    add_flag(lossy, "--source-max", flags.source_max, "upper limit on latent photon numbers");

    auto *zeros = app.add_subcommand("zeros", "exhaustive integer zeros of the g-polynomial");
    add_flag(zeros, "--n", flags.n, "a-mode photon number");
    add_flag(zeros, "--T,--bs", flags.bs, "exact transmittance, e.g. 3/4");
    add_flag(zeros, "--max", flags.m_max, "scan 0..max on both axes");
    add_flag(zeros, "--min-a", flags.m_a_min, "smallest m_a to scan");

    auto *parametric = app.add_subcommand("parametric", "search for polynomial families of zeros");
    add_flag(parametric, "--n", flags.n, "a-mode photon number");
    add_flag(parametric, "--T,--bs", flags.bs, "exact transmittance, e.g. 1/2");
    add_flag(parametric, "--degree", flags.degree, "2 or 3");
    add_flag(parametric, "--lo", flags.lo, "smallest coefficient");
    add_flag(parametric, "--hi", flags.hi, "largest coefficient");

    auto *herald = app.add_subcommand("herald", "heralded photon-number posterior for a squeezed source");
    add_flag(herald, "--t", flags.t, "detected photon count");
    add_flag(herald, "--n-prime", flags.n_prime, "heralded photon number (default: t)");
    add_flag(herald, "--eta", flags.eta, "detector efficiency");
    add_flag(herald, "--r", flags.r, "squeezing parameter");
    add_flag(herald, "--cutoff", flags.cutoff, "source photon-number cutoff");

    auto *dicke = app.add_subcommand("dicke", "P(M'=0) for rotated Dicke states over a range of J");
    add_flag(dicke, "--j-min", flags.j_min, "smallest integer J");
    add_flag(dicke, "--j-max", flags.j_max, "largest integer J");
    add_flag(dicke, "--bs", flags.bs, "rotation as a transmittance or theta=<radians>");

    auto *verify = app.add_subcommand("verify", "certify the published parametric families");
    add_flag(verify, "--tables", flags.tables, "table set to certify (appendix-c)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    RunConfig config;
    try {
        if (config_path) {
            std::ifstream in(*config_path);
            if (!in) {
                err << "error: --config: cannot read '" << *config_path << "'\n";
                return kIo;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            config = parse_config_json(buffer.str());
        }
        if (!app.get_subcommands().empty()) {
            const std::string name = app.get_subcommands().front()->get_name();
            if (config.command && *config.command != name) {
                throw std::invalid_argument("config command '" + *config.command + "' conflicts with '" + name + "'");
            }
            flags.command = name;
        }
        merge_config(config, flags);
        if (!config.command) {
            throw std::invalid_argument("no command given (dist, lossy, zeros, parametric, herald, dicke, verify)");
        }
        const std::string &cmd = *config.command;
        if (cmd == "dist") {
            return cmd_dist(config, out);
        }
        if (cmd == "lossy") {
            return cmd_lossy(config, out);
        }
        if (cmd == "zeros") {
            return cmd_zeros(config, out);
        }
        if (cmd == "parametric") {
            return cmd_parametric(config, out);
        }
        if (cmd == "herald") {
            return cmd_herald(config, out);
        }
        if (cmd == "dicke") {
            return cmd_dicke(config, out);
        }
        if (cmd == "verify") {
            return cmd_verify(config, out);
        }
        throw std::invalid_argument("unknown command '" + cmd + "'");
    } catch (const std::ios_base::failure &e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace homlab::cli
