#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bospec/multiphase.hpp"
#include "bospec/profile.hpp"
#include "bospec/smalldisp.hpp"
#include "bospec/symbol.hpp"

namespace bospec::io {

// All loaders throw InputError on malformed content.

/// {"center":a,"maxima":[...],"minima":[...],"truncated":bool}
std::string profile_to_json(const Profile& p);
Profile profile_from_json(std::string_view text);

/// {"eps":ε,"s":[s_n↑, s_n↓, ..., s_0↑],"chi":[χ_1, ..., χ_n]}
std::string params_to_json(const MultiPhaseParams& p);
MultiPhaseParams params_from_json(std::string_view text);

/// {"modes":[{"k":k,"re":Re V_k,"im":Im V_k}, ...]} with both signs of k listed.
std::string symbol_to_json(const FourierSymbol& v);
FourierSymbol symbol_from_json(std::string_view text);

/// "cosine:A", "constant:A", or the path of a symbol JSON file.
FourierSymbol parse_symbol_spec(std::string_view spec);

/// "2", "3i", "1+2i", "-0.5-1e-3i", "0+2i".
Complex parse_complex(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

std::string read_file(const std::string& path);
/// Writes `content` verbatim (binary mode, so LF stays LF).
void write_file(const std::string& path, std::string_view content);

/// 17 significant digits with a '.' decimal point, independent of the locale.
std::string format_double(double x);

/// Comma-separated rows under a header line, LF terminated.
std::string csv(std::string_view header, std::span<const std::vector<double>> rows);

/// "c,f" samples of f on `count` uniform points of [lo, hi].
template <class P>
std::string profile_csv(const P& p, double lo, double hi, std::size_t count) {
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < count; ++j) {
    const double c = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1);
    rows.push_back({c, p.evaluate(c)});
  }
  return csv("c,f", rows);
}

/// "x,v" samples of the wave at x_j = 2πj/count.
std::string wave_csv(const MultiPhaseParams& p, double t, std::size_t count);

/// "eps,u_re,u_im,phi_re,phi_im,target_re,target_im,abs_err"
std::string sweep_csv(const DispersionSweep& sweep);

/// "u_re,u_im,t_re,t_im,t_shift_re,t_shift_im,residual_minus,residual_plus,limit_re,limit_im,n"
std::string recurrence_csv(std::span<const RecurrenceRow> rows);

std::string finite_gap_report_json(const FiniteGapReport& r);
std::string conservation_report_json(const ConservationReport& r);

}  // namespace bospec::io
