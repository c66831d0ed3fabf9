// config.cpp — key=value configuration parsing and figure presets

#include "qfridge/config.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>

namespace qfridge {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double to_double(std::string_view key, std::string_view v)
{
    const std::string s(trim(v));
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) {
        throw std::invalid_argument("bad number '" + s + "' for " + std::string(key));
    }
    return x;
}

int to_int(std::string_view key, std::string_view v)
{
    const auto t = trim(v);
    int x = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw std::invalid_argument("bad integer '" + std::string(t) + "' for " + std::string(key));
    }
    return x;
}

void set_axis(SweepSpec& spec, std::size_t slot, Axis axis)
{
    if (spec.axes.size() <= slot) spec.axes.resize(slot + 1);
    spec.axes[slot] = std::move(axis);
}

SweepSpec base_spec()
{
    SweepSpec s;
    s.system = {1.0, 2.0, 1.0, 0.5, 1};
    s.reservoirs.cold = {1.5, 0.1, 1.0, ReservoirLabel::cold};
    s.reservoirs.hot = {1.0, 0.1, 1.0, ReservoirLabel::hot};
    return s;
}

Axis n_axis(const std::vector<int>& ns)
{
    Axis a;
    a.name = AxisName::N;
    for (const int n : ns) a.values.push_back(n);
    return a;
}

} // namespace

const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names{"fig3", "fig5-top", "fig5-mid", "fig5-bot",
                                                "fig7", "fig8",     "fig9",     "fig10"};
    return names;
}

SweepSpec preset(std::string_view name)
{
    SweepSpec s = base_spec();
    if (name == "fig3" || name == "fig9") {
        s.command = "map";
        s.axes = {Axis::linspace(AxisName::Omega, -3.0, 3.0, 61),
                  Axis::linspace(AxisName::lambda, -3.0, 3.0, 61)};
        s.backends = name == "fig3" ? std::vector<Backend>{Backend::floquet_pauli}
                                    : std::vector<Backend>{Backend::floquet_pauli, Backend::weak};
        return s;
    }
    if (name == "fig5-top" || name == "fig5-mid" || name == "fig5-bot") {
        const double factor = name == "fig5-top" ? 0.8 : (name == "fig5-mid" ? 1.0 : 1.2);
        s.command = "scan";
        s.system.Omega = factor * (s.system.Delta - s.system.delta);
        s.axes = {Axis::linspace(AxisName::lambda, 0.0, 3.0, 61)};
        s.backends = {Backend::weak, Backend::floquet_pauli, Backend::redfield};
        return s;
    }
    if (name == "fig7" || name == "fig8") {
        s.command = "nscale";
        s.system.Omega = s.system.Delta - s.system.delta;
        s.system.lambda = 0.5;
        s.backends = {Backend::weak, Backend::redfield, Backend::floquet_lindblad,
                      Backend::floquet_pauli};
        if (name == "fig7") {
            s.axes = {n_axis(parse_int_list("1-10"))};
        } else {
            s.reservoirs.cold.beta = 0.3;
            s.reservoirs.hot.beta = 0.2;
            s.axes = {n_axis(parse_int_list("1-20,30-200:10"))};
        }
        return s;
    }
    if (name == "fig10") {
        s.command = "map";
        s.axes = {Axis::linspace(AxisName::Omega, 0.5, 1.5, 21),
                  Axis::linspace(AxisName::lambda, -0.5, 0.5, 21)};
        s.backends = {Backend::redfield, Backend::floquet_pauli};
        return s;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

Axis parse_axis(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw std::invalid_argument("axis must read name:min:max:count");
    return Axis::linspace(parse_axis_name(parts[0]), to_double("axis", parts[1]),
                          to_double("axis", parts[2]), to_int("axis", parts[3]));
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    for (const auto item : split(text, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        // a-b or a-b:step
        const auto dash = item.find('-');
        if (dash == std::string_view::npos || dash == 0) {
            out.push_back(to_int("n_list", item));
            continue;
        }
        const auto range = item.substr(0, item.find(':'));
        const int step = item.find(':') == std::string_view::npos
                             ? 1
                             : to_int("n_list", item.substr(item.find(':') + 1));
        const int lo = to_int("n_list", range.substr(0, dash));
        const int hi = to_int("n_list", range.substr(dash + 1));
        if (step < 1 || hi < lo) throw std::invalid_argument("bad range '" + std::string(item) + "'");
        for (int n = lo; n <= hi; n += step) out.push_back(n);
    }
    return out;
}

void apply_setting(SweepSpec& spec, std::string_view key, std::string_view value)
{
    auto& sys = spec.system;
    auto& cold = spec.reservoirs.cold;
    auto& hot = spec.reservoirs.hot;
    if (key == "delta") sys.delta = to_double(key, value);
    else if (key == "Delta") sys.Delta = to_double(key, value);
    else if (key == "Omega") sys.Omega = to_double(key, value);
    else if (key == "lambda") sys.lambda = to_double(key, value);
    else if (key == "n_qutrits") sys.n_qutrits = to_int(key, value);
    else if (key == "cold.beta") cold.beta = to_double(key, value);
    else if (key == "cold.gamma_bare") cold.gamma_bare = to_double(key, value);
    else if (key == "cold.sigma") cold.sigma = to_double(key, value);
    else if (key == "hot.beta") hot.beta = to_double(key, value);
    else if (key == "hot.gamma_bare") hot.gamma_bare = to_double(key, value);
    else if (key == "hot.sigma") hot.sigma = to_double(key, value);
    else if (key == "axis1") set_axis(spec, 0, parse_axis(value));
    else if (key == "axis2") set_axis(spec, 1, parse_axis(value));
    else if (key == "n_list") spec.axes = {n_axis(parse_int_list(value))};
    else if (key == "backends") {
        spec.backends.clear();
        for (const auto b : split(value, ',')) spec.backends.push_back(parse_backend(b));
    }
    else if (key == "redfield_cutoff_cap") spec.limits.redfield_cutoff_cap = to_int(key, value);
    else if (key == "redfield_max_n") spec.limits.redfield_max_n = to_int(key, value);
    else if (key == "full_max_n") spec.limits.full_max_n = to_int(key, value);
    else if (key == "weak_max_n") spec.limits.weak_max_n = to_int(key, value);
    else if (key == "workers") spec.workers = to_int(key, value);
    else if (key == "out") spec.out = std::string(trim(value));
    else throw std::invalid_argument("unknown configuration key '" + std::string(key) + "'");
}

void apply_config(SweepSpec& spec, std::istream& in)
{
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
        }
        apply_setting(spec, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

} // namespace qfridge
