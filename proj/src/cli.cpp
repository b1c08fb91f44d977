#include "dklr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dklr/codec.hpp"
#include "dklr/core.hpp"
#include "dklr/counting.hpp"
#include "dklr/dcrll.hpp"
#include "dklr/direct.hpp"
#include "dklr/genfunc.hpp"

namespace dklr::cli {

namespace {

struct Options {
  std::optional<int> d, k, l, r, n, n_max, rds_min, rds_max, one, order;
  std::vector<int> weight, charge;
  std::string index;
  std::string seq;
  std::string kind;
  std::string variant = "leading";
  std::string method = "recursive";
  std::string direction;
  std::string gf_action;
  int oracle_limit = kDefaultOracleLimit;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

Constraints constraints_from(const Options& o, bool need_l = true) {
  const int d = require(o.d, "--d");
  const int k = require(o.k, "--k");
  const int r = require(o.r, "--r");
  const int l = need_l ? require(o.l, "--l") : o.l.value_or(0);
  return validate(d, k, l, r);
}

Variant variant_from(const Options& o) {
  if (o.variant == "first" || o.variant == "first-one") return Variant::first_one;
  return Variant::leading_run;
}

SelectionMask mask_from(const Options& o) {
  if (!o.weight.empty() && !o.charge.empty()) throw UsageError("--weight and --charge are mutually exclusive");
  if (!o.weight.empty()) return SelectionMask::weights(o.weight);
  if (!o.charge.empty()) return SelectionMask::charges(o.charge);
  return SelectionMask::unrestricted();
}

std::optional<DsvBounds> bounds_from(const Options& o, int n) {
  if (!o.rds_min && !o.rds_max) return std::nullopt;
  return DsvBounds::make(o.rds_min.value_or(-n), o.rds_max.value_or(n));
}

void add_constraint_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--d", o.d, "minimum internal zero run");
  cmd->add_option("--k", o.k, "maximum internal zero run");
  cmd->add_option("--l", o.l, "maximum leading zero run");
  cmd->add_option("--r", o.r, "maximum trailing zero run");
}

void add_mask_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--weight", o.weight, "enabled weight(s)")->delimiter(',');
  cmd->add_option("--charge", o.charge, "enabled charge(s)")->delimiter(',');
  cmd->add_option("--rds-min", o.rds_min, "lower running-digital-sum bound");
  cmd->add_option("--rds-max", o.rds_max, "upper running-digital-sum bound");
}

void add_variant_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "first | leading")
      ->check(CLI::IsMember({"first", "first-one", "leading", "leading-run"}));
}

void add_method_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "recursive | direct")->check(CLI::IsMember({"recursive", "direct"}));
}

// ---------------------------------------------------------------- count

BigInt single_count(int n, bool charge_kind, int value, const Constraints& c, Variant v, bool direct) {
  if (!direct) return charge_kind ? count_charge(n, value, c, v) : count_weight(n, value, c, v);
  if (charge_kind) return v == Variant::first_one ? c_direct(n, value, c) : c_hat_direct(n, value, c);
  if (v == Variant::first_one) return value == 0 ? BigInt(n == 0 ? 1 : 0) : a_direct(n, value, c);
  return a_hat_direct(n, value, c);
}

int cmd_count(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n");
  if (n < 0) throw DomainError("--n must be non-negative");
  const Variant v = variant_from(o);
  const Constraints c = constraints_from(o, v == Variant::leading_run);
  const bool direct = o.method == "direct";
  const SelectionMask mask = mask_from(o);
  mask.check(n);

  if (auto bounds = bounds_from(o, n)) {
    if (direct) throw UsageError("--method direct does not support running-digital-sum bounds");
    if (mask.mode() == SelectionMask::Mode::weight) {
      throw UsageError("running-digital-sum bounds combine with --charge only");
    }
    BigInt total = 0;
    for (int sigma = -n; sigma <= n; sigma += 2) {
      if (mask.mode() == SelectionMask::Mode::charge &&
          !std::binary_search(mask.values().begin(), mask.values().end(), sigma)) {
        continue;
      }
      total += count_charge_dsv(n, sigma, c, *bounds, v);
    }
    out << total << '\n';
    return kExitOk;
  }

  BigInt total = 0;
  switch (mask.mode()) {
    case SelectionMask::Mode::weight:
      for (int nu : mask.values()) total += single_count(n, false, nu, c, v, direct);
      break;
    case SelectionMask::Mode::charge:
      for (int sigma : mask.values()) total += single_count(n, true, sigma, c, v, direct);
      break;
    case SelectionMask::Mode::unrestricted:
      for (int nu = 0; nu <= n; ++nu) total += single_count(n, false, nu, c, v, direct);
      break;
  }
  out << total << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- table

int cmd_table(const Options& o, std::ostream& out) {
  const int n_max = require(o.n_max, "--n-max");
  const Variant v = variant_from(o);
  const Constraints c = constraints_from(o, v == Variant::leading_run);
  if (o.kind.empty()) throw UsageError("missing required flag --kind");
  const auto kind = o.kind == "charge" ? DistributionKind::charge : DistributionKind::weight;
  DistributionTriangle t = distribution_table(n_max, c, kind, v);
  if (o.method == "direct") {
    for (int n = 0; n <= n_max; ++n) {
      for (int i = 0; i <= n; ++i) {
        const bool charge_kind = kind == DistributionKind::charge;
        const int payload = charge_kind ? -n + 2 * i : i;
        t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] =
            single_count(n, charge_kind, payload, c, v, true);
      }
    }
  }
  out << t.to_tsv();
  return kExitOk;
}

// ---------------------------------------------------------------- codec

BigInt parse_index(const std::string& text) {
  if (text.empty()) throw UsageError("missing required flag --index");
  if (!std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw DomainError("index must be a non-negative decimal integer: \"" + text + "\"");
  }
  return BigInt(text);
}

int cmd_encode(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n");
  if (n < 0) throw DomainError("--n must be non-negative");
  const Constraints c = constraints_from(o);
  const SelectionMask mask = mask_from(o);
  const BigInt index = parse_index(o.index);
  if (auto bounds = bounds_from(o, n)) {
    out << unrank_dsv(index, n, c, mask, *bounds).str() << '\n';
  } else {
    out << unrank(index, n, c, mask).str() << '\n';
  }
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  if (o.seq.empty() && !o.n) throw UsageError("missing required flag --seq");
  const BitSequence x = BitSequence::parse(o.seq);
  const int n = static_cast<int>(x.size());
  if (o.n && *o.n != n) throw DomainError("--n does not match the length of --seq");
  const Constraints c = constraints_from(o);
  const SelectionMask mask = mask_from(o);
  if (auto bounds = bounds_from(o, n)) {
    out << rank_dsv(x, c, mask, *bounds) << '\n';
  } else {
    out << rank(x, c, mask) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const Options& o, std::ostream& out) {
  const int n = require(o.n, "--n");
  if (n < 0) throw DomainError("--n must be non-negative");
  const Constraints c = constraints_from(o);
  const WeightBounds wb = weight_bounds(n, c);
  out << "n\tnu_min\tnu_max\tcharge_bound\n";
  out << n << '\t' << wb.min << '\t' << wb.max << '\t' << charge_bound(n, c.d, c.k) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- gf

struct CheckRow {
  std::string name;
  long long compared = 0;
  long long mismatches = 0;
};

void print_checks(const std::vector<CheckRow>& rows, std::ostream& out) {
  out << "check\tcompared\tmismatches\tstatus\n";
  for (const auto& row : rows) {
    out << row.name << '\t' << row.compared << '\t' << row.mismatches << '\t'
        << (row.mismatches == 0 ? "pass" : "FAIL") << '\n';
  }
}

bool all_pass(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.mismatches == 0; });
}

int cmd_gf(const Options& o, std::ostream& out) {
  const Constraints c = constraints_from(o, false);
  const int order = o.order.value_or(30);
  if (order < 0) throw DomainError("--order must be non-negative");

  if (o.gf_action == "coeffs") {
    const std::string kind = o.kind.empty() ? "weight" : o.kind;
    if (kind == "weight") {
      const Series s = expand(gf_A(c), order, order);
      out << "n\tnu\tcoefficient\n";
      for (int n = 0; n <= order; ++n) {
        for (int nu = 0; nu <= n; ++nu) out << n << '\t' << nu << '\t' << s.at(n, nu) << '\n';
      }
    } else if (kind == "dkr") {
      const Series s = expand(gf_dkr(c), order);
      out << "n\tcoefficient\n";
      for (int n = 0; n <= order; ++n) out << n << '\t' << s.at(n) << '\n';
    } else if (kind == "charge") {
      out << "n\tsigma\tcoefficient\n";
      for (int n = 0; n <= order; ++n) {
        for (int sigma = -n; sigma <= n; sigma += 2) {
          out << n << '\t' << sigma << '\t' << series_C_sigma(sigma, n, c).at(n) << '\n';
        }
      }
    } else {
      throw UsageError("--kind for gf coeffs must be weight, dkr or charge");
    }
    return kExitOk;
  }

  std::vector<CheckRow> rows;
  auto table = CountTable::get(c.d, c.k, c.r);
  {
    CheckRow row{"gf_A"};
    const Series s = expand(gf_A(c), order, order);
    for (int n = 0; n <= order; ++n) {
      for (int nu = 0; nu <= order; ++nu) {
        if (n == 0 && nu == 0) continue;
        ++row.compared;
        if (s.at(n, nu) != table->weight(n, nu)) ++row.mismatches;
      }
    }
    rows.push_back(row);
  }
  {
    CheckRow row{"gf_A_nu"};
    for (int nu = 1; nu <= std::max(1, order); ++nu) {
      const Series s = expand(gf_A_nu(nu, c), order);
      for (int n = 0; n <= order; ++n) {
        ++row.compared;
        if (s.at(n) != table->weight(n, nu)) ++row.mismatches;
      }
    }
    rows.push_back(row);
  }
  {
    CheckRow row{"gf_dkr"};
    const Series s = expand(gf_dkr(c), order);
    for (int n = 1; n <= order; ++n) {
      ++row.compared;
      if (s.at(n) != count_dkr(n, c)) ++row.mismatches;
    }
    rows.push_back(row);
  }
  {
    CheckRow row{"series_C_sigma"};
    for (int sigma = -order; sigma <= order; ++sigma) {
      const Series s = series_C_sigma(sigma, order, c);
      for (int n = 0; n <= order; ++n) {
        ++row.compared;
        if (s.at(n) != c_direct(n, sigma, c)) ++row.mismatches;
      }
    }
    rows.push_back(row);
  }
  {
    CheckRow row{"residue_A_n"};
    for (double y : {0.5, 1.0, 2.0}) {
      for (int n = 1; n <= std::min(order, 20); ++n) {
        ++row.compared;
        const double exact = eval_A_n_exact(n, y, c);
        const double got = eval_A_n_residue(n, y, c).value;
        const double scale = std::max(std::abs(exact), 1e-300);
        if (std::abs(got - exact) > 1e-6 * scale && !(exact == 0.0 && std::abs(got) < 1e-9)) ++row.mismatches;
      }
    }
    rows.push_back(row);
  }
  print_checks(rows, out);
  return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- oracle-check

void oracle_one(const Constraints& c, int n_max, int limit, std::vector<CheckRow>& rows) {
  auto& counters = rows[0];
  auto& direct = rows[1];
  auto& codec = rows[2];
  auto& dsv = rows[3];
  const Constraints first{c.d, c.k, 0, c.r};
  for (int n = 0; n <= n_max; ++n) {
    const auto words = enumerate_all(n, c, limit);
    const auto firsts = enumerate_all(n, first, limit);
    std::map<int, long long> hist_w, hist_c, first_w, first_c;
    for (const auto& x : words) {
      const auto s = stats(x);
      ++hist_w[s.weight];
      ++hist_c[s.charge];
    }
    for (const auto& x : firsts) {
      const auto s = stats(x);
      ++first_w[s.weight];
      ++first_c[s.charge];
    }
    for (int nu = 0; nu <= n; ++nu) {
      counters.compared += 2;
      if (count_weight(n, nu, c, Variant::leading_run) != hist_w[nu]) ++counters.mismatches;
      if (count_weight(n, nu, c, Variant::first_one) != first_w[nu]) ++counters.mismatches;
      if (nu >= 1) {
        ++direct.compared;
        if (a_direct(n, nu, c) != first_w[nu]) ++direct.mismatches;
      }
    }
    for (int sigma = -n; sigma <= n; sigma += 2) {
      counters.compared += 2;
      if (count_charge(n, sigma, c, Variant::leading_run) != hist_c[sigma]) ++counters.mismatches;
      if (count_charge(n, sigma, c, Variant::first_one) != first_c[sigma]) ++counters.mismatches;
      direct.compared += 2;
      if (c_direct(n, sigma, c) != first_c[sigma]) ++direct.mismatches;
      if (ccs_sum(n, sigma, c) != first_c[sigma]) ++direct.mismatches;
    }

    std::vector<SelectionMask> masks{SelectionMask::unrestricted()};
    for (int nu = 0; nu <= n; ++nu) masks.push_back(SelectionMask::weights({nu}));
    for (int sigma = -n; sigma <= n; sigma += 2) masks.push_back(SelectionMask::charges({sigma}));
    for (const auto& mask : masks) {
      BigInt expected = 0;
      for (const auto& x : words) {
        if (!mask.accepts(stats(x))) continue;
        ++codec.compared;
        if (rank(x, c, mask) != expected || unrank(expected, n, c, mask) != x) ++codec.mismatches;
        ++expected;
      }
      ++codec.compared;
      if (codebook_size(n, c, mask) != expected) ++codec.mismatches;
    }

    for (int b1 = -2; b1 <= 2; ++b1) {
      for (int b2 = b1; b2 <= 2; ++b2) {
        const DsvBounds bounds{b1, b2};
        std::map<int, long long> inside;
        for (const auto& x : words) {
          if (within_bounds(x, bounds)) ++inside[stats(x).charge];
        }
        for (int sigma = -n; sigma <= n; sigma += 2) {
          ++dsv.compared;
          if (count_charge_dsv(n, sigma, c, bounds, Variant::leading_run) != inside[sigma]) ++dsv.mismatches;
        }
      }
    }
  }
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const int n_max = o.n_max.value_or(10);
  if (n_max < 0) throw DomainError("--n-max must be non-negative");
  if (n_max > o.oracle_limit) {
    throw DomainError("--n-max exceeds the oracle limit " + std::to_string(o.oracle_limit));
  }
  std::vector<CheckRow> rows{{"counters"}, {"direct"}, {"codec"}, {"dsv"}};
  const bool explicit_constraints = o.d || o.k || o.l || o.r;
  if (explicit_constraints) {
    oracle_one(constraints_from(o), n_max, o.oracle_limit, rows);
  } else {
    for (int d = 0; d <= 2; ++d) {
      for (int k = d; k <= 4; ++k) {
        for (int l = 0; l <= 3; ++l) {
          for (int r = 0; r <= 3; ++r) oracle_one(Constraints{d, k, l, r}, n_max, o.oracle_limit, rows);
        }
      }
    }
  }
  print_checks(rows, out);
  return all_pass(rows) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- peak-shift

int cmd_peak_shift(const Options& o, std::ostream& out) {
  if (o.seq.empty()) throw UsageError("missing required flag --seq");
  const int one = require(o.one, "--one");
  if (o.direction.empty()) throw UsageError("missing required flag --direction");
  const BitSequence x = BitSequence::parse(o.seq);
  const auto dir = o.direction == "left" ? ShiftDirection::left : ShiftDirection::right;
  const BitSequence y = peak_shift(x, one, dir);
  const auto before = stats(x);
  const auto after = stats(y);
  const bool with_constraints = o.d || o.k || o.l || o.r;
  out << "shifted\tnu\tsigma_before\tsigma_after";
  if (with_constraints) out << "\tvalid";
  out << '\n' << y.str() << '\t' << after.weight << '\t' << before.charge << '\t' << after.charge;
  if (with_constraints) out << '\t' << (is_valid(y, constraints_from(o)) ? "yes" : "no");
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting, enumerative coding and generating functions for dklr sequences", "dklr"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "count sequences of given weight, charge or RDS range");
  add_constraint_flags(count, o);
  add_mask_flags(count, o);
  add_variant_flag(count, o);
  add_method_flag(count, o);
  count->add_option("--n", o.n, "sequence length");

  auto* table = app.add_subcommand("table", "weight or charge distribution triangle as TSV");
  add_constraint_flags(table, o);
  add_variant_flag(table, o);
  add_method_flag(table, o);
  table->add_option("--n-max", o.n_max, "largest length");
  table->add_option("--kind", o.kind, "weight | charge")->check(CLI::IsMember({"weight", "charge"}));

  auto* encode = app.add_subcommand("encode", "index -> sequence");
  add_constraint_flags(encode, o);
  add_mask_flags(encode, o);
  encode->add_option("--n", o.n, "sequence length");
  encode->add_option("--index", o.index, "lexicographic index");

  auto* decode = app.add_subcommand("decode", "sequence -> index");
  add_constraint_flags(decode, o);
  add_mask_flags(decode, o);
  decode->add_option("--n", o.n, "sequence length (optional)");
  decode->add_option("--seq", o.seq, "sequence of 0/1");

  auto* bounds = app.add_subcommand("bounds", "weight range and charge bound");
  add_constraint_flags(bounds, o);
  bounds->add_option("--n", o.n, "sequence length");

  auto* gf = app.add_subcommand("gf", "generating-function checks and coefficients");
  add_constraint_flags(gf, o);
  gf->add_option("action", o.gf_action, "verify | coeffs")
      ->required()
      ->check(CLI::IsMember({"verify", "coeffs"}));
  gf->add_option("--order", o.order, "truncation order (default 30)");
  gf->add_option("--kind", o.kind, "weight | dkr | charge (coeffs only)")
      ->check(CLI::IsMember({"weight", "dkr", "charge"}));

  auto* oracle = app.add_subcommand("oracle-check", "compare everything against exhaustive enumeration");
  add_constraint_flags(oracle, o);
  oracle->add_option("--n-max", o.n_max, "largest length (default 10)");
  oracle->add_option("--oracle-limit", o.oracle_limit, "largest length the brute force accepts");

  auto* shift = app.add_subcommand("peak-shift", "move one peak by one position");
  add_constraint_flags(shift, o);
  shift->add_option("--seq", o.seq, "sequence of 0/1");
  shift->add_option("--one", o.one, "1-based ordinal of the one to move");
  shift->add_option("--direction", o.direction, "left | right")->check(CLI::IsMember({"left", "right"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (encode->parsed()) return cmd_encode(o, out);
    if (decode->parsed()) return cmd_decode(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (gf->parsed()) return cmd_gf(o, out);
    if (oracle->parsed()) return cmd_oracle_check(o, out);
    if (shift->parsed()) return cmd_peak_shift(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace dklr::cli
