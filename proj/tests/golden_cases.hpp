#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace wittkit::golden {

struct Case {
  std::vector<std::string> args;
  std::string file;
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {{"witt", "versch", "-n", "2", "--ring", "Z", "--prec", "4", "1 - 3*t"}, "witt_versch.txt"},
      {{"witt", "invert-int", "-l", "2", "--ring", "Q", "--prec", "2"}, "witt_invert_int.txt"},
      {{"endo", "char", "--ring", "Z", "[[1,1],[0,2]]"}, "endo_char.txt"},
      {{"verify", "verfrob-fp", "--ring", "Fp:3", "--prec", "9", "--trials", "200", "--seed", "7", "--json"},
       "verify_verfrob_fp.json"},
      {{"verify", "witt-axioms", "--ring", "Zmod:6", "--prec", "8", "--trials", "500", "--seed", "1", "--json"},
       "verify_witt_axioms.json"},
      {{"verify", "projection-formula", "--ring", "Z", "--trials", "100", "--seed", "42", "--json"},
       "verify_projection_formula.json"},
  };
  return all;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace wittkit::golden
