////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of stummel, a numerical analyzer for Stummel classes,   //
//  Morrey spaces and Lorentz spaces.                                         //
//                                                                            //
//  Copyright 2026 stummel developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "stummel/stummel.h"
#include <CLI11.hpp>
#include <json.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

  using Json = nlohmann::ordered_json;

  constexpr int kExitInvalid = 2;

  struct Options {
    std::string config;
    std::string out;
    std::string format;
    std::string grid;
    std::uint64_t seed = 0;
    bool seedGiven = false;
  };

  //temp file in the target directory, then rename
  bool writeAtomically(const std::string& path, const std::string& text)
  {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      if (!os)
        return false;
      os.write(text.data(), std::streamsize(text.size()));
      os.flush();
      if (!os) {
        std::error_code ec;
        fs::remove(tmp, ec);
        return false;
      }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      return false;
    }
    return true;
  }

  int invalid(const std::string& msg)
  {
    std::cerr << "stummel: " << msg << "\n";
    return kExitInvalid;
  }

  int runCommand(const std::string& command, const Options& opt)
  {
    Json cfg = Json::object();
    if (!opt.config.empty()) {
      std::ifstream is(opt.config, std::ios::binary);
      if (!is)
        return invalid("cannot read config '" + opt.config + "'");
      std::stringstream ss;
      ss << is.rdbuf();
      try {
        cfg = Json::parse(ss.str());
      } catch (const nlohmann::json::exception& e) {
        return invalid(std::string("malformed config: ") + e.what());
      }
      if (!cfg.is_object())
        return invalid("config must be a JSON object");
    }
    if (cfg.contains("command") && cfg["command"] != command)
      return invalid("config command '" + cfg["command"].dump() + "' does not match '" + command + "'");
    cfg["command"] = command;
    if (opt.seedGiven)
      cfg["seed"] = opt.seed;
    if (!opt.grid.empty())
      cfg["grid"] = opt.grid;
    if (!opt.out.empty() || !opt.format.empty()) {
      if (!cfg.contains("output") || !cfg["output"].is_object())
        cfg["output"] = Json::object();
      if (!opt.out.empty())
        cfg["output"]["path"] = opt.out;
      if (!opt.format.empty())
        cfg["output"]["format"] = opt.format;
    }
    std::string outPath;
    if (cfg.contains("output") && cfg["output"].is_object() && cfg["output"].contains("path") &&
        cfg["output"]["path"].is_string())
      outPath = cfg["output"]["path"].get<std::string>();

    char* report = nullptr;
    int code = 0;
    const std::string text = cfg.dump();
    const stummel_status st = stummel_run(text.c_str(), &report, &code);
    if (st != STUMMEL_OK)
      return invalid(std::string(stummel_status_name(st)) + ": " + stummel_last_error());
    const std::string body(report);
    stummel_free_string(report);
    if (outPath.empty())
      std::cout << body;
    else if (!writeAtomically(outPath, body))
      return invalid("cannot write '" + outPath + "'");
    return code;
  }

}

int main(int argc, char** argv)
{
  CLI::App app{ "Stummel class, Morrey and Lorentz space analyzer" };
  app.require_subcommand(1);
  Options opt;
  const char* commands[][2] = {
    { "psi-check", "check the structural conditions of a scale function" },
    { "modulus", "Stummel modulus over a radius grid" },
    { "norm", "Morrey, weak Morrey, Lorentz or Lebesgue norm of a catalog function" },
    { "classify", "membership in S and S~" },
    { "inclusion", "hypothesis checklist for an inclusion theorem" },
    { "verify-paper", "run every catalogued claim" },
  };
  for (auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    sub->add_option("--config", opt.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "seed for randomized candidate centres")
      ->each([&](const std::string&) { opt.seedGiven = true; });
    sub->add_option("--out", opt.out, "output path (written atomically)");
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({ "csv", "json" }));
    sub->add_option("--grid", opt.grid, "r_min,r_max,points");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  for (CLI::App* sub : app.get_subcommands())
    return runCommand(sub->get_name(), opt);
  return kExitInvalid;
}
