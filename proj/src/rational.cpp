#include "dejean/rational.hpp"

namespace dejean {

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t num = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return Rational(num);
    }
    const std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    const std::int64_t den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw std::invalid_argument("trailing characters");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "' (expected a or a/b)");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational: value out of range in '" + text + "'");
  }
}

}  // namespace dejean
