#include "gap.hpp"

#include <gmpxx.h>

#include "error.hpp"

namespace itsec {

namespace {

void require_valid(const GapParams& params) {
  if (params.degree < 2 || params.degree % 2 != 0) {
    throw Error(ErrorKind::validation,
                "gap family needs an even degree of at least 2, got " +
                    std::to_string(params.degree));
  }
  Rational upper(1, static_cast<unsigned long>(params.degree));
  if (params.delta <= 0 || params.delta > upper) {
    throw Error(ErrorKind::validation,
                "gap family needs 0 < delta <= 1/" + std::to_string(params.degree) +
                    ", got " + rational_to_string(params.delta));
  }
}

[[noreturn]] void closed_form_mismatch(const std::string& what, const Rational& got,
                                       const Rational& expected) {
  throw Error(ErrorKind::invariant_violation,
              what + " came out as " + rational_to_string(got) + ", expected " +
                  rational_to_string(expected));
}

mpz_class grid_point_count(std::size_t symbols, unsigned resolution) {
  // compositions of `resolution` into `symbols` parts, plus the appended
  // two-point uniforms for odd resolutions
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), resolution + symbols - 1, symbols - 1);
  if (resolution % 2 == 1) {
    count += mpz_class(symbols) * (symbols - 1) / 2;
  }
  return count;
}

}  // namespace

ChannelMatrix gap_matrix(const GapParams& params) {
  require_valid(params);
  std::size_t n = params.degree;
  Rational base(1, static_cast<unsigned long>(n));
  Rational high = base + params.delta;
  Rational low = base - params.delta;

  std::vector<Distribution> columns;
  columns.reserve(n);
  Alphabet cryptograms = Alphabet::indexed("c", n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Rational> column(n, base);
    // Rows 1 and 2 alternate +-delta across the columns, in opposite phase.
    bool even_column = m % 2 == 0;
    column[0] = even_column ? high : low;
    column[1] = even_column ? low : high;
    columns.emplace_back(cryptograms, std::move(column));
  }
  return ChannelMatrix(Alphabet::indexed("m", n), std::move(columns));
}

GapReport gap_report(const GapParams& params, const GapOptions& options) {
  ChannelMatrix channel = gap_matrix(params);
  std::size_t n = params.degree;
  Rational two_delta = 2 * params.delta;
  Rational posterior_shift = Rational(static_cast<unsigned long>(n)) * params.delta / 2;

  IndResult ind = eps_ind(channel);
  if (ind.value != two_delta) {
    closed_form_mismatch("eps_ind on the gap family", ind.value, two_delta);
  }

  Distribution uniform = Distribution::uniform(channel.messages());
  std::vector<Rational> distances;
  distances.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    distances.push_back(
        variational_distance(posterior(channel, uniform, c), uniform));
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Rational& expected = c < 2 ? posterior_shift : Rational(0);
    if (distances[c] != expected) {
      closed_form_mismatch("posterior distance at cryptogram " + std::to_string(c + 1),
                           distances[c], expected);
    }
  }
  PsSmResult sm = eps_ps_sm(channel, uniform);
  if (sm.value != posterior_shift) {
    closed_form_mismatch("posterior-form epsilon under uniform messages", sm.value,
                         posterior_shift);
  }

  Distribution marginal = cryptogram_marginal(channel, uniform);
  Rational insecure_mass = marginal.weight(0) + marginal.weight(1);
  Rational expected(2, static_cast<unsigned long>(n));
  expected.canonicalize();
  if (insecure_mass != expected) {
    closed_form_mismatch("probability of the two revealing cryptograms", insecure_mass,
                         expected);
  }

  GapReport report{params,
                   ind,
                   sm.value,
                   std::move(distances),
                   std::move(insecure_mass),
                   synthesize(channel),
                   options.grid_resolution,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   std::nullopt,
                   "",
                   ""};

  mpz_class points = grid_point_count(n, options.grid_resolution);
  if (points > options.grid_point_limit) {
    report.grid_skip_reason = "grid of " + points.get_str() + " points exceeds the limit of " +
                              std::to_string(options.grid_point_limit);
    report.ss_skip_reason = report.grid_skip_reason;
    return report;
  }

  std::vector<Distribution> grid = simplex_grid(channel.messages(), options.grid_resolution);
  report.cs_sup = eps_ps_cs_sup(channel, grid);
  report.cm_sup = eps_ps_cm_sup(channel, grid);
  report.sm_sup = eps_ps_sm_sup(channel, grid);
  if (n > options.caps.ss_cryptograms || n > options.caps.ss_messages) {
    report.ss_skip_reason = "semantic security capped at 2^" +
                            std::to_string(options.caps.ss_cryptograms) +
                            " tests, degree " + std::to_string(n) + " is above it";
  } else {
    report.ss_sup = eps_ss_sup(channel, grid, options.caps);
  }
  return report;
}

}  // namespace itsec
