#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "homlab/states.h"
#include "json.hpp"

namespace homlab {

namespace {

using nlohmann::json;

const char *const kKinds[] = {"fock", "coherent", "thermal", "oddcat", "pasmss", "superpos", "custom"};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

double parse_real(const StateDescriptor &d, std::string_view key, const std::string &text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("state '" + d.text + "': '" + std::string(key) + "' is not a number: '" +
                                    text + "'");
    }
    return value;
}

int parse_int(const StateDescriptor &d, std::string_view key, const std::string &text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("state '" + d.text + "': '" + std::string(key) + "' is not an integer: '" +
                                    text + "'");
    }
    return value;
}

std::string require(const StateDescriptor &d, std::string_view key, bool allow_positional) {
    if (auto v = d.get(key)) {
        return *v;
    }
    if (allow_positional) {
        if (auto v = d.get("")) {
            return *v;
        }
    }
    throw std::invalid_argument("state '" + d.text + "': missing parameter '" + std::string(key) + "'");
}

std::optional<double> optional_real(const StateDescriptor &d, std::string_view key) {
    if (auto v = d.get(key)) {
        return parse_real(d, key, *v);
    }
    return std::nullopt;
}

std::optional<int> optional_int(const StateDescriptor &d, std::string_view key) {
    if (auto v = d.get(key)) {
        return parse_int(d, key, *v);
    }
    return std::nullopt;
}

TruncationPolicy truncation_of(const StateDescriptor &d) {
    auto v = d.get("truncation");
    if (!v || *v == "strict") {
        return TruncationPolicy::Strict;
    }
    if (*v == "report") {
        return TruncationPolicy::Report;
    }
    throw std::invalid_argument("state '" + d.text + "': truncation must be 'strict' or 'report'");
}

void check_keys(const StateDescriptor &d, std::initializer_list<std::string_view> allowed) {
    for (const auto &[key, value] : d.params) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || key == a;
        }
        if (!ok) {
            throw std::invalid_argument("state '" + d.text + "': unknown parameter '" +
                                        (key.empty() ? value : key) + "'");
        }
    }
}

Complex json_complex(const json &v) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw std::invalid_argument("custom state: entries must be numbers or [re, im] pairs");
}

}  // namespace

std::optional<std::string> StateDescriptor::get(std::string_view key) const {
    for (const auto &[k, v] : params) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

StateDescriptor parse_state_descriptor(std::string_view text) {
    StateDescriptor d;
    d.text = trim(text);
    const auto colon = d.text.find(':');
    d.kind = trim(std::string_view(d.text).substr(0, colon));
    bool known = false;
    for (const char *k : kKinds) {
        known = known || d.kind == k;
    }
    if (!known) {
        throw std::invalid_argument("unknown state kind '" + d.kind + "' in '" + d.text + "'");
    }
    if (colon == std::string::npos) {
        return d;
    }
    std::stringstream rest(d.text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            throw std::invalid_argument("empty parameter in state '" + d.text + "'");
        }
        const auto eq = item.find('=');
        std::string key = eq == std::string::npos ? std::string() : trim(item.substr(0, eq));
        std::string value = trim(eq == std::string::npos ? item : item.substr(eq + 1));
        if (value.empty() || (eq != std::string::npos && key.empty())) {
            throw std::invalid_argument("malformed parameter '" + item + "' in state '" + d.text + "'");
        }
        if (d.get(key)) {
            throw std::invalid_argument("repeated parameter '" + key + "' in state '" + d.text + "'");
        }
        d.params.emplace_back(std::move(key), std::move(value));
    }
    return d;
}

State build_state(const StateDescriptor &d) {
    if (d.kind == "fock") {
        check_keys(d, {"", "n", "cutoff"});
        return fock(parse_int(d, "n", require(d, "n", true)), optional_int(d, "cutoff"));
    }
    if (d.kind == "coherent") {
        check_keys(d, {"", "beta", "phase", "cutoff", "truncation"});
        const double beta = parse_real(d, "beta", require(d, "beta", true));
        const double phase = optional_real(d, "phase").value_or(0.0);
        return coherent(std::polar(beta, phase), optional_int(d, "cutoff"), truncation_of(d));
    }
    if (d.kind == "thermal") {
        check_keys(d, {"", "nbar", "cutoff", "truncation"});
        return thermal(parse_real(d, "nbar", require(d, "nbar", true)), optional_int(d, "cutoff"),
                       truncation_of(d));
    }
    if (d.kind == "oddcat") {
        check_keys(d, {"", "alpha", "phase", "cutoff", "truncation"});
        const double alpha = parse_real(d, "alpha", require(d, "alpha", true));
        const double phase = optional_real(d, "phase").value_or(0.0);
        return odd_cat(std::polar(alpha, phase), optional_int(d, "cutoff"), truncation_of(d));
    }
    if (d.kind == "pasmss") {
        check_keys(d, {"", "r", "phi", "cutoff", "truncation"});
        return photon_added_smss(parse_real(d, "r", require(d, "r", true)),
                                 optional_real(d, "phi").value_or(0.0), optional_int(d, "cutoff"),
                                 truncation_of(d));
    }
    if (d.kind == "superpos") {
        check_keys(d, {"", "n"});
        std::vector<int> numbers;
        std::stringstream list(require(d, "n", true));
        std::string item;
        while (std::getline(list, item, '+')) {
            numbers.push_back(parse_int(d, "n", trim(item)));
        }
        return superposition(numbers);
    }
    if (d.kind != "custom") {
        throw std::invalid_argument("unknown state kind '" + d.kind + "'");
    }
    check_keys(d, {"", "file"});
    return load_state_json(require(d, "file", true));
}

State load_state_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open state file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str(), path);
}

State parse_state_json(std::string_view document, std::string default_label) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("custom state: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("custom state: top level must be an object");
    }
    std::string label = doc.value("label", default_label);
    const bool has_amps = doc.contains("amplitudes");
    const bool has_rho = doc.contains("rho");
    if (has_amps == has_rho) {
        throw std::invalid_argument("custom state: give exactly one of 'amplitudes' or 'rho'");
    }
    if (has_amps) {
        const json &amps = doc["amplitudes"];
        if (!amps.is_array() || amps.empty()) {
            throw std::invalid_argument("custom state: 'amplitudes' must be a non-empty array");
        }
        std::vector<Complex> c;
        for (const auto &v : amps) {
            c.push_back(json_complex(v));
        }
        return PureState(std::move(c), std::move(label));
    }
    const json &rho = doc["rho"];
    if (!rho.is_array() || rho.empty()) {
        throw std::invalid_argument("custom state: 'rho' must be a non-empty array of rows");
    }
    const std::size_t dim = rho.size();
    std::vector<Complex> data;
    data.reserve(dim * dim);
    for (const auto &row : rho) {
        if (!row.is_array() || row.size() != dim) {
            throw std::invalid_argument("custom state: 'rho' must be square");
        }
        for (const auto &v : row) {
            data.push_back(json_complex(v));
        }
    }
    return MixedState(std::move(data), static_cast<int>(dim) - 1, std::move(label));
}

}  // namespace homlab
