#include "tailrate/graph_spec.hpp"

#include "tailrate/error.hpp"
#include "tailrate/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace tailrate {

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("graph spec '" + text_ + "': " + what + " at position " +
                     std::to_string(pos_));
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ':') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(text_.substr(start, pos_ - start));
  }

  std::vector<int> integer_list() {
    std::vector<int> out{integer()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }

  void finish() {
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string rest() {
    std::string out = text_.substr(pos_);
    pos_ = text_.size();
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Hypergraph parse_graph_spec(const std::string& spec) {
  SpecParser p(spec);
  const std::string head = p.word();
  if (head == "fano") {
    p.finish();
    return fano();
  }
  if (head == "fano-minus-edge") {
    p.finish();
    return fano_minus_edge();
  }
  if (head == "file") {
    p.expect(':');
    std::string path = p.rest();
    if (path.empty()) p.fail("expected a path");
    return load_graph_file(path);
  }
  if (head == "clique" || head == "partite" || head == "cycle") {
    p.expect(':');
    const int r = p.integer();
    p.expect(':');
    const std::size_t arg_pos = p.pos();
    std::vector<int> args = head == "partite" ? p.integer_list() : std::vector<int>{p.integer()};
    p.finish();
    try {
      if (head == "clique") return complete_hypergraph(r, args[0]);
      if (head == "cycle") return tight_cycle(r, args[0]);
      return complete_r_partite(r, args);
    } catch (const InputError& e) {
      throw InputError("graph spec '" + spec + "': " + e.what() + " at position " +
                       std::to_string(arg_pos));
    }
  }
  throw InputError("graph spec '" + spec + "': unknown family '" + head + "' at position 0");
}

Hypergraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("graph file '" + path + "' is not valid JSON: " + e.what());
  }
  return graph_from_json(j);
}

void save_graph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file '" + path + "'");
  out << graph_to_json(h).dump() << "\n";
}

}  // namespace tailrate
