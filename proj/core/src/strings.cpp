#include "qcirc/strings.hpp"

#include <algorithm>
#include <charconv>

#include "qcirc/error.hpp"

namespace qcirc::strings {

namespace {

void require_dual_domain(const IntString& b, std::string_view what) {
  if (b.empty()) throw Error(ErrorCode::empty_string, std::string(what) + ": empty string");
  for (std::int64_t x : b.entries) {
    if (x < 2) throw Error(ErrorCode::entry_below_two, std::string(what) + ": entries must be >= 2");
  }
}

void append_twos(IntString& s, std::int64_t count) {
  for (std::int64_t i = 0; i < count; ++i) s.entries.push_back(2);
}

}  // namespace

mpq_class cf_value(const IntString& b) {
  require_dual_domain(b, "cf_value");
  // Evaluate from the tail: value_i = b_i - 1/value_{i+1} = (b_i p - q) / p.
  mpz_class p = static_cast<long>(b.entries.back());
  mpz_class q = 1;
  for (std::size_t i = b.size() - 1; i-- > 0;) {
    mpz_class next_p = static_cast<long>(b[i]) * p - q;
    q = p;
    p = next_p;
  }
  mpq_class v(p, q);
  v.canonicalize();
  return v;
}

IntString dual_string(const IntString& b) {
  require_dual_domain(b, "dual_string");

  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= 3) big.push_back(i);
  }

  IntString c;
  if (big.empty()) {
    c.entries.push_back(static_cast<std::int64_t>(b.size()) + 1);
  } else {
    // runs[t] = number of 2s before big[t] (t < j) or after the last big entry (t == j).
    const std::size_t j = big.size();
    std::vector<std::int64_t> runs(j + 1);
    runs[0] = static_cast<std::int64_t>(big[0]);
    for (std::size_t t = 1; t < j; ++t) runs[t] = static_cast<std::int64_t>(big[t] - big[t - 1] - 1);
    runs[j] = static_cast<std::int64_t>(b.size() - big[j - 1] - 1);

    c.entries.push_back(2 + runs[0]);
    append_twos(c, b[big[0]] - 3);
    for (std::size_t t = 1; t < j; ++t) {
      c.entries.push_back(3 + runs[t]);
      append_twos(c, b[big[t]] - 3);
    }
    c.entries.push_back(2 + runs[j]);
  }

  const mpq_class v = cf_value(b);
  const mpq_class expected(v.get_num(), v.get_num() - v.get_den());
  if (cf_value(c) != expected) {
    throw Error(ErrorCode::internal, "dual_string: continued-fraction check failed for " + format_int_string(b));
  }
  return c;
}

IntString family_string(const FamilyParams& p) {
  const std::size_t m = 2 * p.k + 1;
  if (p.xs.size() != m) {
    throw Error(ErrorCode::malformed_params,
                "family: expected " + std::to_string(m) + " x values for k=" + std::to_string(p.k));
  }
  if (std::any_of(p.xs.begin(), p.xs.end(), [](std::int64_t x) { return x < 0; })) {
    throw Error(ErrorCode::malformed_params, "family: x values must be >= 0");
  }
  IntString s;
  // 4k+2 slots; the x index runs cyclically through 1..2k+1 twice while the
  // slot type alternates between "3+x" and "2^[x]".
  for (std::size_t t = 0; t < 2 * m; ++t) {
    const std::int64_t x = p.xs[t % m];
    if (t % 2 == 0) {
      s.entries.push_back(3 + x);
    } else {
      append_twos(s, x);
    }
  }
  return s;
}

std::optional<FamilyParams> recognize_family(const IntString& a) {
  if (a.empty()) return std::nullopt;
  if (std::any_of(a.entries.begin(), a.entries.end(), [](std::int64_t x) { return x < 2; })) return std::nullopt;

  const auto big_count = static_cast<std::size_t>(
      std::count_if(a.entries.begin(), a.entries.end(), [](std::int64_t x) { return x >= 3; }));
  if (big_count % 2 == 0) return std::nullopt;
  const std::size_t m = big_count;

  for (std::size_t start = 0; start < a.size(); ++start) {
    if (a[start] < 3) continue;
    const IntString s = a.rotated(start);
    FamilyParams p;
    p.k = (m - 1) / 2;
    p.xs.assign(m, 0);
    std::size_t u = 0;
    for (std::int64_t x : s.entries) {
      if (x >= 3) {
        p.xs[(2 * u) % m] = x - 3;
        ++u;
      }
    }
    if (family_string(p) == s) return p;
  }
  return std::nullopt;
}

SplitRelabel split_relabel(const IntString& a) {
  if (a == IntString{3}) {
    throw Error(ErrorCode::special_case, "special case: (3) is handled separately");
  }
  const auto params = recognize_family(a);
  if (!params) throw Error(ErrorCode::not_in_family, "not a family string: " + format_int_string(a));

  const std::size_t m = 2 * params->k + 1;
  IntString first_half;
  IntString second_half;
  for (std::size_t t = 0; t < 2 * m; ++t) {
    const std::int64_t x = params->xs[t % m];
    IntString& half = t < m ? first_half : second_half;
    if (t % 2 == 0) {
      half.entries.push_back(3 + x);
    } else {
      append_twos(half, x);
    }
  }

  SplitRelabel out;
  out.d = first_half;
  out.d.entries.front() -= 1;
  out.d.entries.back() -= 1;
  out.e = second_half;

  if (dual_string(out.d) != out.e) {
    throw Error(ErrorCode::internal, "split_relabel: d and e are not dual for " + format_int_string(a));
  }
  return out;
}

FamilyParams parse_family_params(std::string_view text) {
  FamilyParams p;
  bool have_k = false;
  bool have_x = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t semi = text.find(';', pos);
    std::string_view field = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.starts_with("k=")) {
      std::string_view v = field.substr(2);
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), p.k);
      if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
        throw Error(ErrorCode::parse_error, "family params: bad k in '" + std::string(text) + "'");
      }
      have_k = true;
    } else if (field.starts_with("x=")) {
      p.xs = parse_int_string(field.substr(2)).entries;
      have_x = true;
    } else if (!field.empty()) {
      throw Error(ErrorCode::parse_error, "family params: unknown field '" + std::string(field) + "'");
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!have_k || !have_x) throw Error(ErrorCode::parse_error, "family params: need k=..;x=..");
  if (p.xs.size() != 2 * p.k + 1) {
    throw Error(ErrorCode::malformed_params, "family params: need 2k+1 x values");
  }
  return p;
}

std::string format_family_params(const FamilyParams& p) {
  return "k=" + std::to_string(p.k) + ";x=" + format_int_string(IntString(p.xs));
}

}  // namespace qcirc::strings
