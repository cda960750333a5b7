#ifndef SDC_JSON_IO_HPP
#define SDC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "sdc/encodings.hpp"
#include "sdc/resources.hpp"

namespace sdc {

// Matrix wire format: {"re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Hadamard wire format: {"d": int, "re": [[...]], "im": [[...]]}, or the
// presets "fourier" / "identity" / {"rotation": theta}.
nlohmann::json hadamard_to_json(const ImperfectHadamard& h);
ImperfectHadamard hadamard_from_json(const nlohmann::json& j, int d);

// {"type": "mes"} | {"type": "werner", "alpha": x} | {"type": "raw", "d": int, matrix...}
PresharedState state_from_json(const nlohmann::json& j, int d);

// {"type": "identity"} | {"type": "dephasing"} | {"type": "depolarising", "beta": x}
// | {"type": "kraus", "ops": [matrix...]}
KrausChannel channel_from_json(const nlohmann::json& j, int d);

// Witness transcript: JSON array of matrices.
UnitarySet unitary_set_from_json(const nlohmann::json& j);

// Command-line shorthand. Accepts a preset/spec string ("fourier",
// "rotation:0.5236", "mes", "werner:0.8", "depolarising:0.9", ...) or a path
// to a JSON file holding the corresponding object.
ImperfectHadamard parse_hadamard_arg(const std::string& arg, int d);
PresharedState parse_state_arg(const std::string& arg, int d);
KrausChannel parse_channel_arg(const std::string& arg, int d);

// 12-significant-digit decimal formatting shared by CSV and text reports.
std::string format_double(double x);

}  // namespace sdc

#endif  // SDC_JSON_IO_HPP
