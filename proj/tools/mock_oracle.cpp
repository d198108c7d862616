// Scripted oracle process for exercising the line protocol end to end.
// Answers are replayed from a dataset TSV: dimensions decode from the
// recorded type, ZNORM from the type's norm column.
//
// Usage: mock_oracle <dataset.tsv>

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "quintic/arith.hpp"
#include "quintic/dataset.hpp"
#include "quintic/dpf.hpp"
#include "quintic/errors.hpp"

namespace {

using quintic::DpfType;

bool parse_radicand(const std::string& text, uint64_t& out) {
  if (text.empty()) return false;
  uint64_t value = 0;
  for (const char ch : text) {
    if (ch < '0' || ch > '9') return false;
    if (value > (UINT64_MAX - (ch - '0')) / 10) return false;
    value = value * 10 + (ch - '0');
  }
  out = value;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mock_oracle <dataset.tsv>\n";
    return 2;
  }

  std::map<uint64_t, DpfType> table;
  try {
    for (const auto& rec : quintic::load_dataset(argv[1]))
      table.emplace(rec.d, rec.dpf_type);
  } catch (const quintic::Error& err) {
    std::cerr << "mock_oracle: " << err.what() << "\n";
    return 1;
  }

  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::string reply;
    const auto space = line.find(' ');
    const std::string command = line.substr(0, space);
    const std::string rest =
        space == std::string::npos ? std::string() : line.substr(space + 1);

    uint64_t d = 0;
    if (command != "ABS" && command != "INT" && command != "REL" &&
        command != "ZNORM") {
      reply = "ERR unknown command";
    } else if (!parse_radicand(rest, d)) {
      reply = "ERR malformed request";
    } else {
      bool normalized = d >= 2;
      if (normalized) {
        try {
          normalized = quintic::normalize_radicand(d).dstar == d;
        } catch (const quintic::Error&) {
          normalized = false;
        }
      }
      const auto it = table.find(d);
      if (!normalized) {
        reply = "ERR not normalized";
      } else if (it == table.end()) {
        reply = "ERR unknown radicand";
      } else {
        const quintic::DpfSignature sig =
            quintic::signature_from_type(it->second);
        if (command == "ABS") {
          reply = "OK " + std::to_string(sig.A);
        } else if (command == "INT") {
          reply = "OK " + std::to_string(sig.I);
        } else if (command == "REL") {
          reply = "OK " + std::to_string(sig.R);
        } else {
          const bool zeta = sig.norm_kind == quintic::NormKind::zeta ||
                            sig.norm_kind == quintic::NormKind::both;
          reply = zeta ? "OK YES" : "OK NO";
        }
      }
    }

    std::cout << reply << "\n" << std::flush;
  }
  return 0;
}
