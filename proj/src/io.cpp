#include "bospec/io.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "bospec/errors.hpp"

namespace bospec::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

template <class F>
auto with_field_errors(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InputError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string profile_to_json(const Profile& p) {
  json j;
  j["center"] = p.center;
  j["maxima"] = p.maxima;
  j["minima"] = p.minima;
  j["truncated"] = p.truncated;
  return j.dump(2) + "\n";
}

Profile profile_from_json(std::string_view text) {
  const json j = parse_json(text, "profile");
  Profile p = with_field_errors("profile", [&] {
    Profile out;
    out.center = j.at("center").get<double>();
    out.maxima = j.at("maxima").get<std::vector<double>>();
    out.minima = j.at("minima").get<std::vector<double>>();
    out.truncated = j.at("truncated").get<bool>();
    return out;
  });
  try {
    check_interlacing(p, false);
  } catch (const InterlacingViolation& e) {
    throw InputError(std::string("invalid profile: ") + e.what());
  }
  return p;
}

std::string params_to_json(const MultiPhaseParams& p) {
  json j;
  j["eps"] = p.eps;
  j["s"] = p.ordered();
  j["chi"] = p.chi;
  return j.dump(2) + "\n";
}

MultiPhaseParams params_from_json(std::string_view text) {
  const json j = parse_json(text, "params");
  const auto [eps, s, chi] = with_field_errors("params", [&] {
    return std::tuple{j.at("eps").get<double>(), j.at("s").get<std::vector<double>>(),
                      j.contains("chi") ? j.at("chi").get<std::vector<double>>() : std::vector<double>{}};
  });
  return MultiPhaseParams::from_ordered(eps, s, chi);
}

std::string symbol_to_json(const FourierSymbol& v) {
  json modes = json::array();
  for (const FourierMode& m : v.modes()) modes.push_back({{"k", m.k}, {"re", m.value.real()}, {"im", m.value.imag()}});
  json j;
  j["modes"] = modes;
  return j.dump(2) + "\n";
}

FourierSymbol symbol_from_json(std::string_view text) {
  const json j = parse_json(text, "symbol");
  const auto modes = with_field_errors("symbol", [&] {
    std::vector<FourierMode> out;
    for (const json& m : j.at("modes")) {
      out.push_back({m.at("k").get<long>(), Complex{m.at("re").get<double>(), m.value("im", 0.0)}});
    }
    return out;
  });
  return FourierSymbol::from_fourier(modes);
}

FourierSymbol parse_symbol_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view kind = spec.substr(0, colon);
    const double a = parse_double(spec.substr(colon + 1));
    if (kind == "cosine") return FourierSymbol::cosine(a);
    if (kind == "constant") return FourierSymbol::constant(a);
  }
  return symbol_from_json(read_file(std::string(spec)));
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty complex number");
  if (text.back() != 'i') return {parse_double(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split_at = 0;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view re = body.substr(0, split_at);
  std::string_view im = body.substr(split_at);
  double im_value = 0.0;
  if (im.empty() || im == "+") {
    im_value = 1.0;
  } else if (im == "-") {
    im_value = -1.0;
  } else {
    im_value = parse_double(im);
  }
  return {re.empty() ? 0.0 : parse_double(re), im_value};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("write to '" + path + "' failed");
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string csv(std::string_view header, std::span<const std::vector<double>> rows) {
  std::string out(header);
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += format_double(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string wave_csv(const MultiPhaseParams& p, double t, std::size_t count) {
  const std::vector<double> v = sample_wave(p, t, count);
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < count; ++j) {
    rows.push_back({2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count), v[j]});
  }
  return csv("x,v", rows);
}

std::string sweep_csv(const DispersionSweep& sweep) {
  std::vector<std::vector<double>> rows;
  for (const SweepCell& c : sweep.results) {
    rows.push_back({c.eps, c.u.real(), c.u.imag(), c.phi.real(), c.phi.imag(), c.target.real(), c.target.imag(),
                    c.abs_err});
  }
  return csv("eps,u_re,u_im,phi_re,phi_im,target_re,target_im,abs_err", rows);
}

std::string recurrence_csv(std::span<const RecurrenceRow> rows) {
  std::vector<std::vector<double>> table;
  for (const RecurrenceRow& r : rows) {
    table.push_back({r.u.real(), r.u.imag(), r.t_u.real(), r.t_u.imag(), r.t_shift.real(), r.t_shift.imag(),
                     r.residual_minus, r.residual_plus, r.limit.real(), r.limit.imag(),
                     static_cast<double>(r.dim)});
  }
  return csv("u_re,u_im,t_re,t_im,t_shift_re,t_shift_im,residual_minus,residual_plus,limit_re,limit_im,n", table);
}

std::string finite_gap_report_json(const FiniteGapReport& r) {
  json j;
  j["passed"] = r.passed;
  j["inconclusive"] = r.inconclusive;
  j["endpoint_error"] = r.endpoint_error;
  j["widest_spurious_gap"] = r.widest_spurious_gap;
  j["truncation"] = r.truncation;
  j["truncation_converged"] = r.truncation_converged;
  j["truncation_movement"] = r.truncation_movement;
  j["fit_samples"] = r.fit_samples;
  j["fit_modes"] = r.fit_modes;
  j["fit_residual"] = r.fit_residual;
  j["predicted"] = json::parse(profile_to_json(r.predicted));
  j["computed"] = json::parse(profile_to_json(r.computed));
  return j.dump(2) + "\n";
}

std::string conservation_report_json(const ConservationReport& r) {
  json j;
  j["passed"] = r.passed;
  j["drift"] = r.drift;
  j["times"] = r.times;
  j["top"] = r.top;
  j["truncation"] = r.truncation;
  j["fit_residual"] = r.fit_residual;
  return j.dump(2) + "\n";
}

}  // namespace bospec::io
