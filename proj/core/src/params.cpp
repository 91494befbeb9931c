#include "gpade/params.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "gpade/arith.hpp"
#include "gpade/error.hpp"

namespace gpade {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string bare_message(const Error& e) {
  std::string text = e.what();
  auto colon = text.find(": ");
  return colon == std::string::npos ? text : text.substr(colon + 2);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GParams derive_params(const std::vector<Rational>& alphas) {
  if (alphas.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "need alpha0 and at least one alpha_j");
  }
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (alphas[j] <= 0) {
      throw Error(ErrorCode::NonPositiveAlpha,
                  "alpha" + std::to_string(j) + " = " + to_string(alphas[j]) + " is not positive");
    }
  }
  const int m = static_cast<int>(alphas.size()) - 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      Rational diff = alphas[i] - alphas[j];
      if (is_integer(diff)) {
        throw Error(ErrorCode::IntegerDifference,
                    "alpha" + std::to_string(i) + " - alpha" + std::to_string(j) + " = " +
                        to_string(diff) + " is an integer",
                    {i, j});
      }
    }
  }

  GParams gp;
  gp.m_ = m;
  for (const auto& a : alphas) {
    Rational q = a;
    q.canonicalize();
    gp.alpha_.push_back(q);
    gp.r_.push_back(q.get_num());
    gp.s_.push_back(q.get_den());
  }
  const Integer& s0 = gp.s_[0];
  gp.s_lcm_ = gp.v_lcm_ = gp.d_lcm_ = 1;
  gp.R_ = gp.S_ = gp.U_ = gp.V_ = 0;
  for (int j = 1; j <= m; ++j) {
    Rational sum = gp.alpha_[j] + gp.alpha_[0];
    Integer u = sum.get_num();
    Integer v = sum.get_den();
    Integer prod = s0 * gp.s_[j];
    if (prod % v != 0) {
      throw Error(ErrorCode::InvalidArgument, "v_j does not divide s0*s_j");
    }
    Integer d = prod / v;
    gp.u_.push_back(u);
    gp.v_.push_back(v);
    gp.d_.push_back(d);
    gp.s_lcm_ = lcm(gp.s_lcm_, gp.s_[j]);
    gp.v_lcm_ = lcm(gp.v_lcm_, v);
    gp.d_lcm_ = lcm(gp.d_lcm_, d);
    gp.R_ = std::max(gp.R_, gp.r_[j]);
    gp.S_ = std::max(gp.S_, gp.s_[j]);
    gp.U_ = std::max(gp.U_, u);
    gp.V_ = std::max(gp.V_, v);
  }
  gp.dtilde_ = gp.d_lcm_ / gcd(gp.d_lcm_, s0);
  return gp;
}

DomainCheck padic_domain_check(const GParams& gp, std::uint64_t p, const Rational& beta) {
  if (beta == 0) throw Error(ErrorCode::InvalidArgument, "beta must be nonzero");
  DomainCheck out;
  const Integer pz(static_cast<unsigned long>(p));
  out.delta_p = (gp.s_lcm() % pz == 0) ? 1 : 0;
  out.delta_2p = (p == 2 && out.delta_p == 1) ? 1 : 0;
  // |beta|_p < 2^{-delta(2,p)} |s|_p  <=>  v_p(beta) > v_p(s) + delta(2,p)
  std::int64_t vb = p_valuation(beta, p);
  std::int64_t vs = p_valuation(gp.s_lcm(), p);
  out.admissible = vb > vs + out.delta_2p;
  return out;
}

std::vector<Rational> parse_param_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<long> m;
  std::map<long, Rational> values;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, where() + "expected 'key = value'");
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    try {
      if (key == "m") {
        if (m) throw Error(ErrorCode::ParseError, "duplicate m");
        Integer mv = parse_integer(value);
        if (mv < 1 || mv > 64) throw Error(ErrorCode::ParseError, "m must be in 1..64");
        m = mv.get_si();
      } else if (key.size() > 5 && key.substr(0, 5) == "alpha") {
        Integer idx = parse_integer(key.substr(5));
        if (idx < 0 || idx > 64) throw Error(ErrorCode::ParseError, "alpha index out of range");
        long k = idx.get_si();
        if (values.count(k)) throw Error(ErrorCode::ParseError, "duplicate alpha" + std::to_string(k));
        values[k] = parse_rational(value);
      } else {
        throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, where() + bare_message(e));
    }
  }
  if (!m) throw Error(ErrorCode::ParseError, "missing 'm = <int>'");
  std::vector<Rational> out;
  for (long j = 0; j <= *m; ++j) {
    auto it = values.find(j);
    if (it == values.end()) throw Error(ErrorCode::ParseError, "missing alpha" + std::to_string(j));
    out.push_back(it->second);
  }
  if (values.size() != static_cast<std::size_t>(*m + 1)) {
    throw Error(ErrorCode::ParseError, "alpha index exceeds m = " + std::to_string(*m));
  }
  return out;
}

std::vector<Rational> read_param_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_param_text(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + bare_message(e));
  }
}

}  // namespace gpade
