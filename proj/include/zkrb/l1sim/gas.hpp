// Copyright 2026 The zkrb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZKRB_L1SIM_GAS_HPP_
#define ZKRB_L1SIM_GAS_HPP_

#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "zkrb/common/config.hpp"
#include "zkrb/common/error.hpp"

namespace zkrb::l1sim {

/// Analytic gas prices, in gas units. The defaults follow public Ethereum
/// precompile and calldata pricing.
struct GasSchedule {
  std::uint64_t tx_base = 21000;
  std::uint64_t pairing_base = 45000;
  std::uint64_t pairing_per_pair = 34000;
  std::uint64_t ecmul_per_input = 6000;
  std::uint64_t ecadd_per_input = 150;
  std::uint64_t calldata_nonzero_byte = 16;
  std::uint64_t calldata_zero_byte = 4;
  std::uint64_t storage_update = 5000;

  static constexpr std::string_view kKeys[] = {
      "tx_base",         "pairing_base",          "pairing_per_pair",   "ecmul_per_input",
      "ecadd_per_input", "calldata_nonzero_byte", "calldata_zero_byte", "storage_update"};

  static GasSchedule from_config(const KeyValueConfig& cfg) {
    GasSchedule g;
    g.tx_base = cfg.get_u64("tx_base", g.tx_base);
    g.pairing_base = cfg.get_u64("pairing_base", g.pairing_base);
    g.pairing_per_pair = cfg.get_u64("pairing_per_pair", g.pairing_per_pair);
    g.ecmul_per_input = cfg.get_u64("ecmul_per_input", g.ecmul_per_input);
    g.ecadd_per_input = cfg.get_u64("ecadd_per_input", g.ecadd_per_input);
    g.calldata_nonzero_byte = cfg.get_u64("calldata_nonzero_byte", g.calldata_nonzero_byte);
    g.calldata_zero_byte = cfg.get_u64("calldata_zero_byte", g.calldata_zero_byte);
    g.storage_update = cfg.get_u64("storage_update", g.storage_update);
    return g;
  }

  std::string to_config() const {
    std::string s = "[gas]\n";
    auto line = [&](std::string_view k, std::uint64_t v) {
      s += std::string(k) + " = " + std::to_string(v) + "\n";
    };
    line("tx_base", tx_base);
    line("pairing_base", pairing_base);
    line("pairing_per_pair", pairing_per_pair);
    line("ecmul_per_input", ecmul_per_input);
    line("ecadd_per_input", ecadd_per_input);
    line("calldata_nonzero_byte", calldata_nonzero_byte);
    line("calldata_zero_byte", calldata_zero_byte);
    line("storage_update", storage_update);
    return s;
  }

  bool operator==(const GasSchedule&) const = default;
};

inline constexpr std::uint64_t kVerifierPairings = 4;

inline std::uint64_t calldata_gas(std::span<const std::uint8_t> calldata, const GasSchedule& g) {
  std::uint64_t gas = 0;
  for (std::uint8_t b : calldata) gas += b == 0 ? g.calldata_zero_byte : g.calldata_nonzero_byte;
  return gas;
}

/// Gas of one verifier call with k public inputs.
inline std::uint64_t gas_for_submission(std::size_t k, std::span<const std::uint8_t> calldata,
                                        const GasSchedule& g) {
  return g.tx_base + g.pairing_base + kVerifierPairings * g.pairing_per_pair +
         k * (g.ecmul_per_input + g.ecadd_per_input) + calldata_gas(calldata, g) +
         g.storage_update;
}

/// Non-negative decimal number held exactly as value / 10^scale.
struct Decimal {
  unsigned __int128 value = 0;
  unsigned scale = 0;

  static constexpr unsigned kMaxScale = 18;

  static Decimal parse(std::string_view s) {
    Decimal d;
    bool dot = false, digits = false;
    for (char c : s) {
      if (c == '.' && !dot) {
        dot = true;
        continue;
      }
      if (c < '0' || c > '9') throw UsageError("invalid decimal '" + std::string(s) + "'");
      if (dot && ++d.scale > kMaxScale) throw UsageError("too many decimal places in '" + std::string(s) + "'");
      if (d.value > (~static_cast<unsigned __int128>(0) - 9) / 10) {
        throw UsageError("decimal '" + std::string(s) + "' out of range");
      }
      d.value = d.value * 10 + static_cast<unsigned>(c - '0');
      digits = true;
    }
    if (!digits) throw UsageError("invalid decimal '" + std::string(s) + "'");
    return d;
  }

  std::string to_string(unsigned places) const {
    std::string digits;
    unsigned __int128 v = value;
    do {
      digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    } while (v != 0);
    if (scale == 0 && places == 0) return digits;
    while (digits.size() <= scale) digits.insert(digits.begin(), '0');
    std::string out = digits.substr(0, digits.size() - scale) + "." + digits.substr(digits.size() - scale);
    for (unsigned i = scale; i < places; ++i) out += '0';
    return out;
  }

  double to_double() const {
    double d = static_cast<double>(value);
    for (unsigned i = 0; i < scale; ++i) d /= 10;
    return d;
  }
};

struct PriceConfig {
  Decimal gas_price_gwei = Decimal{20, 0};
  Decimal eth_usd = Decimal{3000, 0};

  static constexpr std::string_view kKeys[] = {"gas_price_gwei", "eth_usd"};

  static PriceConfig from_config(const KeyValueConfig& cfg) {
    PriceConfig p;
    if (cfg.has("gas_price_gwei")) p.gas_price_gwei = Decimal::parse(cfg.get_string("gas_price_gwei", ""));
    if (cfg.has("eth_usd")) p.eth_usd = Decimal::parse(cfg.get_string("eth_usd", ""));
    return p;
  }
};

/// Reads a gas schedule and price config from one key = value file,
/// rejecting unknown keys.
struct CostConfig {
  GasSchedule schedule;
  PriceConfig price;

  static CostConfig from_config(const KeyValueConfig& cfg) {
    std::set<std::string_view> known(std::begin(GasSchedule::kKeys), std::end(GasSchedule::kKeys));
    known.insert(std::begin(PriceConfig::kKeys), std::end(PriceConfig::kKeys));
    for (const auto& [k, v] : cfg.values()) {
      if (!known.count(k)) throw UsageError("unknown config key '" + k + "'");
    }
    return {GasSchedule::from_config(cfg), PriceConfig::from_config(cfg)};
  }
  static CostConfig load(const std::string& path) { return from_config(KeyValueConfig::load(path)); }
};

/// Exact non-negative fraction in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t n, std::uint64_t d) {
    if (d == 0) throw UsageError("zero denominator");
    std::uint64_t g = std::gcd(n, d);
    return {n / (g ? g : 1), d / (g ? g : 1)};
  }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Exact decimal when the denominator has only factors 2 and 5, else six
  /// places rounded half-even.
  std::string to_string() const;
  auto operator<=>(const Rational& o) const {
    return static_cast<unsigned __int128>(num) * o.den <=> static_cast<unsigned __int128>(o.num) * den;
  }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

namespace detail {

inline unsigned __int128 pow10(unsigned e) {
  unsigned __int128 v = 1;
  while (e-- > 0) v *= 10;
  return v;
}

inline unsigned __int128 checked_mul(unsigned __int128 a, unsigned __int128 b) {
  if (a != 0 && b > ~static_cast<unsigned __int128>(0) / a) throw UsageError("cost arithmetic overflow");
  return a * b;
}

/// round(n / d) half-even.
inline unsigned __int128 div_round_half_even(unsigned __int128 n, unsigned __int128 d) {
  unsigned __int128 q = n / d, r = n % d;
  unsigned __int128 twice = r * 2;
  if (twice > d || (twice == d && (q & 1) != 0)) ++q;
  return q;
}

}  // namespace detail

inline std::string Rational::to_string() const {
  std::uint64_t d = den;
  unsigned places = 0;
  while (d % 10 == 0) d /= 10, ++places;
  while (d % 2 == 0) d /= 2, ++places;
  while (d % 5 == 0) d /= 5, ++places;
  if (d != 1 || places > 6) places = 6;
  auto scaled = detail::div_round_half_even(detail::checked_mul(num, detail::pow10(places)), den);
  std::string s = Decimal{scaled, places}.to_string(places);
  return s;
}

struct TxCost {
  Rational gas_per_tx;
  /// USD per transaction rounded half-even to six decimal places.
  Decimal usd_per_tx;
};

inline TxCost per_tx_cost(std::uint64_t gas_used, std::size_t m, const PriceConfig& price) {
  if (m == 0) throw UsageError("batch size must be at least 1");
  using detail::checked_mul;
  using detail::pow10;
  // usd = gas * gwei * 1e-9 * eth_usd / m, scaled by 1e6 for six places.
  unsigned __int128 num = checked_mul(checked_mul(checked_mul(gas_used, price.gas_price_gwei.value),
                                                  price.eth_usd.value),
                                      pow10(6));
  unsigned __int128 den = checked_mul(
      checked_mul(m, pow10(9)), pow10(price.gas_price_gwei.scale + price.eth_usd.scale));
  return {Rational::make(gas_used, m), Decimal{detail::div_round_half_even(num, den), 6}};
}

}  // namespace zkrb::l1sim

#endif  // ZKRB_L1SIM_GAS_HPP_
