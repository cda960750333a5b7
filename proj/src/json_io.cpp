#include "sdc/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sdc/errors.hpp"

namespace sdc {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> part_to_rows(const ComplexMatrix& m, bool imaginary) {
    const int n = m.dim();
    std::vector<std::vector<double>> rows(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        rows[static_cast<size_t>(r)].resize(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c)
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                imaginary ? m(r, c).imag() : m(r, c).real();
    }
    return rows;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RangeError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

bool looks_like_file(const std::string& arg) {
    return std::filesystem::exists(arg);
}

// "name:1.25" -> {"name", 1.25}; plain "name" -> {"name", nullopt-ish flag}
bool split_scalar_suffix(const std::string& arg, const std::string& prefix, double* out) {
    if (arg.rfind(prefix + ":", 0) != 0) return false;
    const std::string tail = arg.substr(prefix.size() + 1);
    size_t used = 0;
    const double v = std::stod(tail, &used);
    if (used != tail.size()) throw RangeError("bad numeric suffix in '" + arg + "'");
    *out = v;
    return true;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    return json{{"re", part_to_rows(m, false)}, {"im", part_to_rows(m, true)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.contains("re")) throw RangeError("matrix JSON needs 're'");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    const int n = static_cast<int>(re.size());
    std::vector<std::vector<double>> im(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
    if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(im.size()) != n) throw RangeError("matrix JSON re/im shapes differ");

    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(re[static_cast<size_t>(r)].size()) != n ||
            static_cast<int>(im[static_cast<size_t>(r)].size()) != n)
            throw RangeError("matrix JSON rows are ragged");
        for (int c = 0; c < n; ++c)
            m(r, c) = Complex(re[static_cast<size_t>(r)][static_cast<size_t>(c)],
                              im[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
    return m;
}

json hadamard_to_json(const ImperfectHadamard& h) {
    json j = matrix_to_json(h.matrix());
    j["d"] = h.dim();
    return j;
}

ImperfectHadamard hadamard_from_json(const json& j, int d) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "fourier") return fourier_hadamard(d);
        if (name == "identity") return identity_hadamard(d);
        throw RangeError("unknown hadamard preset: " + name);
    }
    if (j.is_object() && j.contains("rotation")) return rotation_hadamard(j.at("rotation").get<double>());
    if (j.is_object() && j.contains("re")) {
        ComplexMatrix m = matrix_from_json(j);
        if (j.contains("d") && j.at("d").get<int>() != m.dim())
            throw RangeError("hadamard JSON 'd' disagrees with the matrix shape");
        return ImperfectHadamard(std::move(m));
    }
    throw RangeError("unrecognized hadamard JSON");
}

PresharedState state_from_json(const json& j, int d) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "mes") return standard_mes(d);
    if (type == "werner") return werner_state(j.at("alpha").get<double>(), standard_mes(d));
    if (type == "raw") {
        ComplexMatrix m = matrix_from_json(j);
        const int local = j.contains("d") ? j.at("d").get<int>() : d;
        return PresharedState(DensityOperator(std::move(m), {local, local}));
    }
    throw RangeError("unknown state type: " + type);
}

KrausChannel channel_from_json(const json& j, int d) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "identity") return KrausChannel::identity(d);
    if (type == "dephasing") return dephasing_channel(d);
    if (type == "depolarising") return depolarising_channel(j.at("beta").get<double>(), d);
    if (type == "kraus") {
        std::vector<ComplexMatrix> ops;
        for (const auto& op : j.at("ops")) ops.push_back(matrix_from_json(op));
        if (ops.empty()) throw RangeError("kraus channel needs at least one operator");
        return KrausChannel(ops[0].dim(), ops[0].dim(), std::move(ops));
    }
    throw RangeError("unknown channel type: " + type);
}

UnitarySet unitary_set_from_json(const json& j) {
    if (!j.is_array()) throw RangeError("unitary set JSON must be an array of matrices");
    std::vector<ComplexMatrix> us;
    for (const auto& entry : j) us.push_back(matrix_from_json(entry));
    return UnitarySet(std::move(us));
}

ImperfectHadamard parse_hadamard_arg(const std::string& arg, int d) {
    double theta = 0.0;
    if (arg == "fourier") return fourier_hadamard(d);
    if (arg == "identity") return identity_hadamard(d);
    if (split_scalar_suffix(arg, "rotation", &theta)) return rotation_hadamard(theta);
    if (looks_like_file(arg)) return hadamard_from_json(load_json_file(arg), d);
    throw RangeError("cannot parse hadamard argument: " + arg);
}

PresharedState parse_state_arg(const std::string& arg, int d) {
    double alpha = 0.0;
    if (arg == "mes") return standard_mes(d);
    if (split_scalar_suffix(arg, "werner", &alpha)) return werner_state(alpha, standard_mes(d));
    if (looks_like_file(arg)) return state_from_json(load_json_file(arg), d);
    throw RangeError("cannot parse state argument: " + arg);
}

KrausChannel parse_channel_arg(const std::string& arg, int d) {
    double beta = 0.0;
    if (arg == "identity") return KrausChannel::identity(d);
    if (arg == "dephasing") return dephasing_channel(d);
    if (split_scalar_suffix(arg, "depolarising", &beta)) return depolarising_channel(beta, d);
    if (looks_like_file(arg)) return channel_from_json(load_json_file(arg), d);
    throw RangeError("cannot parse channel argument: " + arg);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace sdc
