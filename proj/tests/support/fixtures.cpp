#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dsorder/io.hpp"

namespace testkit {

std::string fixture_text(const std::string& name) {
  const std::string path = std::string(DSORDER_FIXTURE_DIR) + "/" + name + ".jsonl";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dsorder::DistributedSystem fixture_system(const std::string& name) { return dsorder::parse_system(fixture_text(name)); }

dsorder::StrictPoset fixture_poset(const std::string& name) { return dsorder::parse_poset(fixture_text(name)); }

dsorder::StrictPoset vee_poset(const std::string& prefix) {
  const std::vector<dsorder::ElementPair> pairs{{1, 0}, {2, 0}};
  return dsorder::close_or_throw({prefix + "1", prefix + "2", prefix + "3"}, pairs);
}

dsorder::MultiUtility naive_tuple() {
  using dsorder::Rational;
  return {{{Rational(0), Rational(1), Rational(1), Rational(2), Rational(1), Rational(2)}}};
}

dsorder::MultiUtility quotient_rankings() {
  using dsorder::Rational;
  // y1, x1, x2, y3, x3
  return {{{Rational(2), Rational(4), Rational(5), Rational(1), Rational(3)},
           {Rational(1), Rational(2), Rational(5), Rational(3), Rational(4)}}};
}

}  // namespace testkit
