#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "hlgeo/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-10"};
  std::vector<int> unattainable;
  app.add_option("--known-unattainable", unattainable,
                 "criteria whose FAIL does not change the exit status (still reported)");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> known(unattainable.begin(), unattainable.end());

  int unexpected = 0;
  std::vector<int> failed;
  for (const auto& c : hlgeo::run_acceptance()) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id << ": " << c.title << "\n";
    for (const auto& d : c.details) std::cout << "      " << d << "\n";
    if (!c.pass) {
      failed.push_back(c.id);
      if (!known.count(c.id)) ++unexpected;
    }
  }
  std::cout << "\n" << (10 - failed.size()) << "/10 criteria pass";
  if (!failed.empty()) {
    std::cout << "; failing:";
    for (int id : failed) std::cout << " " << id << (known.count(id) ? " (known unattainable)" : "");
  }
  std::cout << "\n";
  return unexpected;
}
