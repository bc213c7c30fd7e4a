#include <cstdio>
#include <fstream>
#include <iostream>

#include "fewbody/cli.hpp"

int main(int argc, char** argv) {
  const auto out = fewbody::run_cli(std::vector<std::string>(argv + 1, argv + argc));
  if (!out.message.empty()) std::cerr << out.message;
  if (!out.artifact.empty()) {
    if (out.out_path.empty()) {
      std::cout << out.artifact;
    } else {
      std::ofstream f(out.out_path);
      if (!f) {
        std::cerr << "cannot write " << out.out_path << "\n";
        return fewbody::kExitInputError;
      }
      f << out.artifact;
    }
  }
  return out.exit_code;
}
