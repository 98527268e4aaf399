#include "cyclo/rational.hpp"

namespace cyclo {

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoull(text), 1);
    return Rational(std::stoull(text.substr(0, slash)),
                    std::stoull(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw InvalidArgument("not a rational: '" + text + "'");
  }
}

}  // namespace cyclo
