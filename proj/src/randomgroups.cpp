#include "sccat/randomgroups.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <stdexcept>

#include "sccat/linkcert.hpp"
#include "sccat/pieces.hpp"

namespace sccat {

void validate(const DensityParams& dp) {
  if (dp.m < 2) throw std::invalid_argument("density model: m must be >= 2");
  if (dp.l < 1) throw std::invalid_argument("density model: l must be >= 1");
  if (!(dp.d > 0 && dp.d < 1)) throw std::invalid_argument("density model: d must lie in (0, 1)");
}

std::size_t relator_count(const DensityParams& dp) {
  const double x = std::pow(2.0 * dp.m - 1, dp.d * dp.l);
  // guard against 3^1 evaluating to 2.9999…
  const auto n = static_cast<std::size_t>(std::floor(x * (1 + 1e-12)));
  return std::max<std::size_t>(1, n);
}

Presentation sample_presentation(const DensityParams& dp, std::size_t index) {
  validate(dp);
  std::seed_seq seq{static_cast<std::uint32_t>(dp.seed), static_cast<std::uint32_t>(dp.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const auto letters = static_cast<std::uint32_t>(2 * dp.m);
  std::uniform_int_distribution<std::uint32_t> first(0, letters - 1), next(0, letters - 2);
  auto letter = [](std::uint32_t code) { return Letter{code / 2, (code % 2) == 1}; };

  std::vector<std::string> names;
  for (int i = 0; i < dp.m; ++i) names.push_back(dp.m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  std::vector<Word> rels;
  const std::size_t count = relator_count(dp);
  while (rels.size() < count) {
    Word w;
    w.push_back(letter(first(rng)));
    while (static_cast<int>(w.size()) < dp.l) {
      // skip the inverse of the previous letter
      const std::uint32_t banned = w.back().generator * 2 + (w.back().inverted ? 0 : 1);
      std::uint32_t c = next(rng);
      if (c >= banned) ++c;
      w.push_back(letter(c));
    }
    if (dp.l > 1 && w.back() == w.front().inverse()) continue;
    rels.push_back(std::move(w));
  }
  return Presentation::create(std::move(names), std::move(rels));
}

StatsTable experiment(const DensityParams& dp, bool run_certify) {
  validate(dp);
  StatsTable table;
  if (dp.samples == 0) return table;
  StatsRow row;
  row.m = dp.m;
  row.l = dp.l;
  row.d = dp.d;
  row.samples = dp.samples;
  row.min_central_path = std::numeric_limits<double>::infinity();
  double piece_sum = 0, margin_sum = 0;
  std::size_t margins = 0;
  for (std::size_t i = 0; i < dp.samples; ++i) {
    const Presentation p = sample_presentation(dp, i);
    const SmallCancellationReport rep = check_conditions(p);
    piece_sum += static_cast<double>(rep.max_piece_length);
    ++row.max_piece_histogram[rep.max_piece_length];
    if (rep.passes_c16) ++row.passed_c16;
    if (!rep.passes_uniform) continue;
    ++row.passed_uniform;
    if (!run_certify) continue;
    const Certificate cert = certify(p);
    if (cert.verdict == Verdict::certified) {
      ++row.certified;
      // forests and untouched discs have no finite margin
      const double margin = std::min(cert.type1_margin, cert.type2_margin);
      if (std::isfinite(margin)) {
        margin_sum += margin;
        ++margins;
      }
      row.min_central_path = std::min(row.min_central_path, cert.min_central_path);
    } else {
      ++row.refused_after_gate;
    }
  }
  row.max_piece_mean = piece_sum / static_cast<double>(dp.samples);
  row.mean_margin = margins ? margin_sum / static_cast<double>(margins) : 0.0;
  table.push_back(std::move(row));
  return table;
}

void write_csv(std::ostream& os, const StatsTable& table) {
  os << "# density model, relators = floor((2m-1)^(d*l)); the d < 1/12 bound is asymptotic in l, "
        "finite-l rates show trends only\n";
  os << "m,l,d,samples,pass_c16,pass_uniform,certified,mean_margin,max_piece_mean\n";
  for (const StatsRow& r : table) {
    os << r.m << ',' << r.l << ',' << std::setprecision(6) << r.d << ',' << r.samples << ','
       << std::setprecision(6) << r.rate(r.passed_c16) << ',' << r.rate(r.passed_uniform) << ','
       << r.rate(r.certified) << ',' << std::setprecision(9) << r.mean_margin << ',' << r.max_piece_mean << '\n';
  }
}

}  // namespace sccat
