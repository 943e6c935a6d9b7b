// Copyright 2026 The nludiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>

#include "nludiag/demo.hpp"
#include "nludiag/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"generate synthetic desk-scale datasets in the shipped layout"};

  std::string root = "data";
  std::vector<std::string> tasks = {"sst-2", "mrpc", "sts-b"};
  std::size_t train = 2000;
  std::size_t dev = 400;
  unsigned seed = 7;

  app.add_option("--data-root", root, "output root directory");
  app.add_option("--task", tasks, "tasks to generate (sst-2, mrpc, sts-b)");
  app.add_option("--train", train, "training records per task");
  app.add_option("--dev", dev, "dev records per task");
  app.add_option("--seed", seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& task : tasks) {
      nludiag::write_demo_task(root, task, train, dev, seed);
      std::cout << root << "/" << task << ": " << train << " train, " << dev << " dev\n";
    }
  } catch (const nludiag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nludiag::exit_code_for(e.code());
  }
  return 0;
}
