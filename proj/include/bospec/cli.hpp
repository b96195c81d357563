#pragma once

#include <cstddef>
#include <iosfwd>

namespace bospec::cli {

/// Exit statuses of run().
inline constexpr int kSuccess = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Entry point of the bo-spectra command line. Subcommands: profile, convex,
/// multiphase, verify-finite-gap, conserve, sweep, sinusoidal.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// BO_SPECTRA_MAX_N when set to a positive integer, otherwise `fallback`.
/// Throws InputError for a malformed value.
std::size_t truncation_cap(std::size_t fallback);

}  // namespace bospec::cli
