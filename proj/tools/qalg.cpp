#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "qalg/qalg.hpp"

namespace fs = std::filesystem;
using qalg::report::json;

namespace {

struct Settings {
  bool json_out = false;
  std::uint64_t bound = 64;
  std::size_t attempts = 64;
  std::optional<std::uint64_t> seed;
  std::string output;
};

std::uint64_t effective_seed(const Settings& s) {
  if (s.seed) return *s.seed;
  if (const char* env = std::getenv("QALG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      qalg::fail(qalg::ErrorCode::MalformedFile, std::string("QALG_SEED is not a number: ") + env);
    }
  }
  return 0;
}

void emit(const Settings& s, const std::string& text) {
  if (s.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(s.output, std::ios::binary);
  if (!out) qalg::fail(qalg::ErrorCode::MalformedFile, "cannot write '" + s.output + "'");
  out << text;
}

std::string format(const Settings& s, const json& r) { return s.json_out ? r.dump(2) + "\n" : qalg::report::render_text(r); }

json error_json(const qalg::Error& e) {
  return {{"error", std::string(qalg::error_name(e.code()))}, {"message", e.what()}, {"exit_code", qalg::exit_status(e.code())}};
}

std::vector<std::string> batch_files(const std::string& dir) {
  if (!fs::is_directory(dir)) qalg::fail(qalg::ErrorCode::MalformedFile, "'" + dir + "' is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

// Each file gets its own report; failures are recorded in place and the worst status is returned.
int run_batch(const Settings& s, const std::string& dir, const qalg::report::Options& opt) {
  json all = json::array();
  std::string text;
  int status = 0;
  for (const auto& file : batch_files(dir)) {
    json r;
    try {
      r = qalg::report::cmd_fg(qalg::io::load(file), opt);
    } catch (const qalg::Error& e) {
      r = {{"command", "fg"}, {"input", {{"file", fs::path(file).filename().string()}}}};
      r.update(error_json(e));
      status = std::max(status, qalg::exit_status(e.code()));
    }
    text += qalg::report::render_text(r) + "\n";
    all.push_back(std::move(r));
  }
  emit(s, s.json_out ? all.dump(2) + "\n" : text);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional quiver algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qalg::report::kVersion);
  Settings s;
  app.add_flag("--json", s.json_out, "Machine-readable JSON report");
  app.add_option("--bound", s.bound, "Search bound for automorphism and outer orders")->check(CLI::PositiveNumber);
  app.add_option("--attempts", s.attempts, "Random functionals tried when searching for a Frobenius form");
  app.add_option("--seed", s.seed, "Seed for randomised searches (default: QALG_SEED, else 0)");
  app.add_option("-o,--output", s.output, "Write the result to a file");

  std::string file;
  auto* info = app.add_subcommand("info", "Dimensions, radical layers, socle and Frobenius status");
  info->add_option("file", file)->required();
  auto* type = app.add_subcommand("type", "Type of the separated quiver with a certificate");
  type->add_option("file", file)->required();
  auto* nakayama = app.add_subcommand("nakayama", "Nakayama automorphism, its order and outer order");
  nakayama->add_option("file", file)->required();

  std::string kind, sigma_text;
  auto* construct = app.add_subcommand("construct", "Build a new algebra and write it in table form");
  construct->add_option("kind", kind)->required()->check(CLI::IsMember(std::vector<std::string>(
      std::begin(qalg::report::kConstructKinds), std::end(qalg::report::kConstructKinds))));
  construct->add_option("file", file)->required();
  construct->add_option("--sigma", sigma_text, "Automorphism: JSON file, inline JSON, or 'nakayama'");

  std::string batch;
  auto* fg = app.add_subcommand("fg", "Decide finite generation of cohomology");
  auto* fg_file = fg->add_option("file", file);
  auto* fg_batch = fg->add_option("--batch", batch, "Classify every *.json file of a directory");
  fg_file->excludes(fg_batch);
  fg->callback([&] {
    if (file.empty() && batch.empty()) throw CLI::ValidationError("fg", "a file or --batch directory is required");
  });

  std::vector<std::string> check_files;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in property corpus");
  selftest->add_option("files", check_files, "Algebra files to validate as well");

  // every option may also be given after the subcommand
  for (auto* sub : {info, type, nakayama, construct, fg, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    qalg::report::Options opt{s.bound, s.attempts, effective_seed(s)};
    if (*selftest) {
      auto summary = qalg::selftest::run_all(opt.seed, check_files);
      emit(s, s.json_out ? qalg::selftest::to_json(summary, opt.seed).dump(2) + "\n" : qalg::selftest::render(summary));
      return summary.exit_code();
    }
    if (*fg && !batch.empty()) return run_batch(s, batch, opt);
    auto in = qalg::io::load(file);
    if (*construct) {
      std::optional<json> sigma;
      if (!sigma_text.empty()) {
        if (sigma_text == "nakayama") {
          sigma = json("nakayama");
        } else if (fs::is_regular_file(sigma_text)) {
          sigma = qalg::io::parse_json_text(qalg::io::read_file(sigma_text));
        } else {
          sigma = qalg::io::parse_json_text(sigma_text);
        }
      }
      qalg::Algebra out = qalg::report::cmd_construct(kind, in, sigma, opt);
      if (auto v = qalg::check_algebra(out); !v.empty())
        qalg::fail(qalg::ErrorCode::InternalInconsistency, "constructed table fails " + v[0].kind);
      json j = qalg::io::algebra_to_json(out);
      j["construction"] = {{"kind", kind}, {"input_digest", in.digest}};
      emit(s, j.dump(2) + "\n");
      return 0;
    }
    json r = *info ? qalg::report::cmd_info(in, opt)
           : *type ? qalg::report::cmd_type(in, opt)
           : *nakayama ? qalg::report::cmd_nakayama(in, opt)
                       : qalg::report::cmd_fg(in, opt);
    emit(s, format(s, r));
    return 0;
  } catch (const qalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (s.json_out) std::cout << error_json(e).dump(2) << "\n";
    return qalg::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: InternalInconsistency: " << e.what() << "\n";
    return 4;
  }
}
