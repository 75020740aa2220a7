// Copyright 2026 The spaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>

#include "commands.hpp"
#include "spaug/common/error.hpp"
#include "spaug/imgcorrupt/corrupt.hpp"
#include "spaug/imgcorrupt/image_io.hpp"

namespace spaug::cli {

namespace {

struct CorruptArgs {
  std::string in;
  std::string out;
  std::string kind;
  int severity = 3;
};

int run_corrupt(RunConfig& config, const CorruptArgs& args) {
  const CorruptionSpec spec{corruption_kind_from_string(args.kind), args.severity, config.seed()};
  spec.validate();
  const Image input = read_image(args.in);
  const Image output = corrupt(input, spec, config.severity_table());
  write_png(output, args.out);

  auto prov = provenance(config, "img corrupt");
  prov["input"] = args.in;
  prov["output"] = args.out;
  prov["kind"] = args.kind;
  prov["severity"] = args.severity;
  prov["width"] = input.width();
  prov["height"] = input.height();
  const auto sidecar = args.out + ".prov.json";
  const auto text = prov.dump(2) + "\n";
  write_file_bytes(sidecar, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));

  const double p = psnr(input, output);
  nlohmann::json result = {{"output", args.out}, {"provenance", sidecar}, {"kind", args.kind},
                           {"severity", args.severity}, {"seed", config.seed()}};
  if (std::isfinite(p)) result["psnr"] = p;
  char line[256];
  std::snprintf(line, sizeof line, "%s: %s severity %d, seed %llu, PSNR %.2f dB", args.out.c_str(),
                args.kind.c_str(), args.severity, static_cast<unsigned long long>(config.seed()), p);
  emit(config, result, line);
  return 0;
}

}  // namespace

void add_image_commands(CLI::App& app, RunConfig& config, Action& action) {
  auto* img = app.add_subcommand("img", "Image corruption");
  img->require_subcommand(1);
  img->fallthrough();
  auto* cmd = img->add_subcommand("corrupt", "Corrupt one image");
  cmd->fallthrough();
  auto args = std::make_shared<CorruptArgs>();
  cmd->add_option("--in", args->in, "Input PNG or JPEG")->required();
  cmd->add_option("--out", args->out, "Output PNG")->required();
  cmd->add_option("--kind", args->kind, "Corruption kind (e.g. pixelate, zoom+snow)")->required();
  cmd->add_option("--severity", args->severity, "Severity 1-5")->check(CLI::Range(1, 5));
  cmd->callback([&config, &action, args] { action = [&config, args] { return run_corrupt(config, *args); }; });
}

}  // namespace spaug::cli
