#include <ajscc/run_config.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace ajscc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: not a number: '" + text + "'");
    }
    if (consumed != text.size()) {
        throw std::invalid_argument("config: trailing junk in number: '" +
                                    text + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& text) {
    if (text.empty() || text[0] == '-') {
        // stoull would silently wrap negatives around.
        throw std::invalid_argument("config: not a nonnegative integer: '" +
                                    text + "'");
    }
    std::size_t consumed = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: not an integer: '" + text + "'");
    }
    if (consumed != text.size()) {
        throw std::invalid_argument("config: trailing junk in integer: '" +
                                    text + "'");
    }
    return static_cast<std::uint64_t>(v);
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "yes" || text == "1") return true;
    if (text == "false" || text == "no" || text == "0") return false;
    throw std::invalid_argument("config: not a boolean: '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(trim(text.substr(begin, end - begin)));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return parts;
}

}  // namespace

std::vector<double> parse_value_list(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) {
        throw std::invalid_argument("config: empty value list");
    }

    if (text.rfind("log:", 0) == 0) {
        const std::vector<std::string> parts = split(text.substr(4), ':');
        if (parts.size() != 3) {
            throw std::invalid_argument(
                "config: log range needs log:min:max:count");
        }
        const double lo = parse_double(parts[0]);
        const double hi = parse_double(parts[1]);
        const std::uint64_t n = parse_u64(parts[2]);
        if (!(lo > 0.0) || !(hi > lo) || n < 2) {
            throw std::invalid_argument("config: bad log range");
        }
        std::vector<double> values;
        const double llo = std::log(lo);
        const double lhi = std::log(hi);
        for (std::uint64_t i = 0; i < n; ++i) {
            values.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
        }
        return values;
    }

    if (text.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(text, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument(
                "config: linear range needs start:step:stop");
        }
        const double start = parse_double(parts[0]);
        const double step = parse_double(parts[1]);
        const double stop = parse_double(parts[2]);
        if (!(step > 0.0) || !(stop >= start)) {
            throw std::invalid_argument("config: bad linear range");
        }
        std::vector<double> values;
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (v > stop + 1e-9) break;
            values.push_back(v);
        }
        return values;
    }

    std::vector<double> values;
    for (const std::string& part : split(text, ',')) {
        values.push_back(parse_double(part));
    }
    return values;
}

RunConfig default_run_config() {
    RunConfig cfg;
    cfg.sweep.phi_values = default_phi_grid();
    cfg.sweep.lambda_values = default_lambda_grid();
    return cfg;
}

void validate(const RunConfig& cfg) {
    validate(cfg.device);
    validate(cfg.quantizer);
    validate(cfg.sweep);
}

RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg = default_run_config();
    std::string section;
    std::string line;
    int line_no = 0;

    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') continue;

        if (text.front() == '[') {
            if (text.back() != ']') fail("unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (section != "device" && section != "quantizer" &&
                section != "sweep" && section != "output") {
                fail("unknown section [" + section + "]");
            }
            continue;
        }

        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) fail("empty key");
        if (section.empty()) fail("key outside any section");

        if (section == "device") {
            if (key == "kprime") cfg.device.kprime = parse_double(value);
            else if (key == "vth") cfg.device.vth = parse_double(value);
            else if (key == "lambda") cfg.device.lambda = parse_double(value);
            else if (key == "label") cfg.device.label = value;
            else fail("unknown device key '" + key + "'");
        } else if (section == "quantizer") {
            if (key == "phi") cfg.quantizer.phi = parse_double(value);
            else if (key == "vgs_min") cfg.quantizer.vgs_min = parse_double(value);
            else if (key == "vgs_max") cfg.quantizer.vgs_max = parse_double(value);
            else fail("unknown quantizer key '" + key + "'");
        } else if (section == "sweep") {
            if (key == "phi_values") cfg.sweep.phi_values = parse_value_list(value);
            else if (key == "lambda_values")
                cfg.sweep.lambda_values = parse_value_list(value);
            else if (key == "vds_min") cfg.sweep.vds_min = parse_double(value);
            else if (key == "vds_max") cfg.sweep.vds_max = parse_double(value);
            else if (key == "vds_step") cfg.sweep.vds_step = parse_double(value);
            else if (key == "include_vds_endpoint")
                cfg.sweep.include_vds_endpoint = parse_bool(value);
            else if (key == "vgs_min") cfg.sweep.vgs_min = parse_double(value);
            else if (key == "vgs_max") cfg.sweep.vgs_max = parse_double(value);
            else if (key == "pairing") {
                if (value == "sliding") cfg.sweep.pairing = Pairing::kSliding;
                else if (value == "disjoint")
                    cfg.sweep.pairing = Pairing::kDisjoint;
                else fail("pairing must be sliding or disjoint");
            } else if (key == "noise_sigma")
                cfg.sweep.noise_sigma = parse_double(value);
            else if (key == "seed") cfg.sweep.seed = parse_u64(value);
            else fail("unknown sweep key '" + key + "'");
        } else {  // output
            if (key == "path") cfg.output_path = value;
            else fail("unknown output key '" + key + "'");
        }
    }

    cfg.sweep.device = cfg.device;
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    return parse_run_config(in);
}

}  // namespace ajscc
