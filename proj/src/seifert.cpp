#include "toledo/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toledo/errors.hpp"

namespace toledo {

SeifertSignature SeifertSignature::validate(
    std::vector<long long> m, std::optional<SeifertTwists> twists) {
  if (m.size() < 3)
    throw TooFewConePoints("need at least 3 cone points, got " +
                           std::to_string(m.size()));
  for (long long mk : m)
    if (mk < 2)
      throw BadMultiplicity("multiplicity " + std::to_string(mk) + " < 2");
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = j + 1; k < m.size(); ++k)
      if (std::gcd(m[j], m[k]) != 1)
        throw NotCoprime("gcd(" + std::to_string(m[j]) + "," +
                         std::to_string(m[k]) + ") > 1");
  if (m.size() == 3) {
    std::vector<long long> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<long long>{2, 3, 5})
      throw ExcludedTriple("{2,3,5} is excluded");
  }
  if (twists && twists->c.size() != m.size())
    throw LengthMismatch("twist list length != number of cone points");

  SeifertSignature sig;
  sig.m_ = std::move(m);
  sig.product_ = 1;
  for (long long mk : sig.m_) sig.product_ *= mk;
  sig.twists_ = std::move(twists);
  return sig;
}

SignaturePtr make_signature(std::vector<long long> m,
                            std::optional<SeifertTwists> twists) {
  return std::make_shared<const SeifertSignature>(
      SeifertSignature::validate(std::move(m), std::move(twists)));
}

std::string orbifold_presentation(const SeifertSignature& sig) {
  std::ostringstream out;
  out << "⟨";
  const auto& m = sig.multiplicities();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out << ",";
    out << "u" << (k + 1);
  }
  out << " | ";
  for (std::size_t k = 0; k < m.size(); ++k)
    out << "u" << (k + 1) << "^" << m[k] << " = ";
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out << "·";
    out << "u" << (k + 1);
  }
  out << " = 1⟩";
  return out.str();
}

namespace {

std::vector<long long> parse_int_list(const std::string& text,
                                      char sep = ',') {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("trailing junk in '" + item + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

}  // namespace

SignaturePtr parse_signature(const std::string& literal) {
  std::string head = literal;
  std::optional<SeifertTwists> twists;
  auto semi = literal.find(';');
  if (semi != std::string::npos) {
    head = literal.substr(0, semi);
    std::string tail = literal.substr(semi + 1);
    auto colon = tail.find(':');
    if (colon == std::string::npos)
      throw ParseError("twist suffix must look like ';c0:c1,...,cn'");
    SeifertTwists tw;
    try {
      tw.c0 = std::stoll(tail.substr(0, colon));
    } catch (const std::logic_error&) {
      throw ParseError("bad twist integer '" + tail.substr(0, colon) + "'");
    }
    tw.c = parse_int_list(tail.substr(colon + 1));
    twists = std::move(tw);
  }
  return make_signature(parse_int_list(head), std::move(twists));
}

std::string signature_literal(const SeifertSignature& sig) {
  std::ostringstream out;
  const auto& m = sig.multiplicities();
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out << ",";
    out << m[k];
  }
  if (sig.twists()) {
    out << ";" << sig.twists()->c0 << ":";
    for (std::size_t k = 0; k < sig.twists()->c.size(); ++k) {
      if (k) out << ",";
      out << sig.twists()->c[k];
    }
  }
  return out.str();
}

}  // namespace toledo
