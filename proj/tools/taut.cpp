#include "taut/generate.hpp"
#include "taut/io.hpp"
#include "taut/len.hpp"
#include "taut/tighten.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

using namespace taut;

namespace {

enum Exit { Ok = 0, Invalid = 1, Defect = 2 };

struct Failure {
  int code;
  std::string message;
};

void write_file(const std::string& path, const std::string& text) {
  // Write to a sibling temp file and rename, so readers never see half a record.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Failure{Invalid, "cannot write " + path};
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Failure{Invalid, "cannot write " + path};
}

Instance load(const std::string& file) {
  try {
    return read_instance(file);
  } catch (const ParseError& e) {
    std::string where = file;
    if (e.line > 0) where += ":" + std::to_string(e.line) + ":" + std::to_string(e.column);
    throw Failure{Invalid, where + ": " + e.what()};
  }
}

// Closure members (paths touching the boundary) are accepted only where asked.
std::vector<std::string> problems(const Instance& inst, bool closure = false) {
  std::vector<std::string> out;
  for (const auto& v : validate(inst.domain)) out.push_back("domain: " + v.describe());
  if (!out.empty()) return out;
  if (inst.path.empty()) return {"path: no vertices"};
  const auto strict = validate_path(make_path(inst.path, inst.domain), inst.domain);
  if (closure && !strict.empty() && validate_path(make_path(inst.path, inst.domain, true), inst.domain).empty()) {
    return out;
  }
  for (const auto& s : strict) out.push_back("path: " + s);
  return out;
}

Instance load_valid(const std::string& file, bool closure = false) {
  Instance inst = load(file);
  auto bad = problems(inst, closure);
  if (!bad.empty()) {
    std::string msg = file + ": invalid instance";
    for (const auto& b : bad) msg += "\n  " + b;
    throw Failure{Invalid, msg};
  }
  return inst;
}

int cmd_validate(const std::string& file) {
  const Instance inst = load(file);
  const auto bad = problems(inst);
  if (bad.empty()) {
    std::cout << "ok\n";
    return Ok;
  }
  for (const auto& b : bad) std::cout << b << "\n";
  return Invalid;
}

struct TightenFlags {
  std::size_t certify_lines = 1000;
  std::uint64_t seed = 42;
  std::string svg, json;
  LenOptions len;
  unsigned jobs = 1;
};

struct TightenOutcome {
  std::string record;
  int code = Ok;
  std::string error;
};

TightenOutcome tighten_one(const std::string& file, const TightenFlags& f) {
  TightenOutcome out;
  try {
    const Instance inst = load_valid(file);
    TightenOptions opts;
    opts.certify = true;
    opts.certify_lines = f.certify_lines;
    opts.certify_seed = f.seed;
    const auto t0 = std::chrono::steady_clock::now();
    const TightenReport rep = tighten(make_path(inst.path, inst.domain), inst.domain, opts);
    const auto t1 = std::chrono::steady_clock::now();

    ResultRecord r;
    r.name = inst.name;
    r.vertices = rep.result.vertices;
    r.euclidean_length = rep.result.length();
    r.len = len(rep.result.vertices, f.len);
    r.certificate = rep.certificate;
    r.moves = rep.moves.size();
    r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.funnel_agrees = rep.funnel_agrees;
    out.record = write_result(r);
    if (!f.json.empty()) write_file(f.json, out.record);
    if (!f.svg.empty()) write_file(f.svg, render_svg(inst.domain, inst.path, rep.result.vertices));
    if (!rep.certificate.clean() || !rep.funnel_agrees) {
      out.code = Defect;
      out.error = file + ": result failed its certificate";
    }
  } catch (const Failure& e) {
    out.code = e.code;
    out.error = e.message;
  } catch (const NonTerminating& e) {
    out.code = Defect;
    out.error = file + ": " + e.what();
  } catch (const std::exception& e) {
    out.code = Defect;
    out.error = file + ": internal error: " + e.what();
  }
  return out;
}

int cmd_tighten(const std::vector<std::string>& files, const TightenFlags& f) {
  if (files.size() > 1 && (!f.svg.empty() || !f.json.empty())) {
    throw Failure{Invalid, "--svg and --json take a single instance file"};
  }
  std::vector<TightenOutcome> outcomes(files.size());
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(m);
        if (next == files.size()) return;
        i = next++;
      }
      outcomes[i] = tighten_one(files[i], f);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(f.jobs, static_cast<unsigned>(files.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = Ok;
  for (const auto& o : outcomes) {
    if (f.json.empty()) std::cout << o.record;
    if (!o.error.empty()) std::cerr << o.error << "\n";
    code = std::max(code, o.code);
  }
  return code;
}

int cmd_homotopic(const std::string& a, const std::string& b) {
  const Instance ia = load_valid(a, true), ib = load_valid(b, true);
  auto path = [](const Instance& i) {
    PathPoly strict = make_path(i.path, i.domain);
    return validate_path(strict, i.domain).empty() ? strict : make_path(i.path, i.domain, true);
  };
  if (write_instance({ia.domain, {}, "", 0}) != write_instance({ib.domain, {}, "", 0})) {
    throw Failure{Invalid, "instances use different domains"};
  }
  try {
    const bool same = homotopic(path(ia), path(ib), ia.domain);
    std::cout << (same ? "true" : "false") << "\n";
  } catch (const EndpointMismatch& e) {
    throw Failure{Invalid, e.what()};
  }
  return Ok;
}

int cmd_len(const std::string& file, const LenOptions& opts) {
  const Instance inst = load(file);
  if (inst.path.empty()) throw Failure{Invalid, file + ": path has no vertices"};
  const LenValue v = len(inst.path, opts);
  char buf[128];
  std::snprintf(buf, sizeof buf, "{\"error_bound\": %.12g, \"value\": %.12g}\n", v.error_bound, v.value);
  std::cout << buf;
  return Ok;
}

int cmd_gen(const GenOptions& g, const std::string& out) {
  if (g.vertices < 4) throw Failure{Invalid, "--vertices must be at least 4"};
  const std::string text = write_instance(generate_instance(g));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest homotopic paths in polygonal domains with holes"};
  app.require_subcommand(1);

  std::string file, file_b;
  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("file", file, "Instance JSON")->required();

  std::vector<std::string> files;
  TightenFlags tf;
  auto* tighten_cmd = app.add_subcommand("tighten", "Compute the efficient path of each instance");
  tighten_cmd->add_option("files", files, "Instance JSON files")->required();
  tighten_cmd->add_option("--certify-lines", tf.certify_lines, "Random lines for the certificate")
      ->capture_default_str();
  tighten_cmd->add_option("--seed", tf.seed, "Seed for certificate lines")->capture_default_str();
  tighten_cmd->add_option("--svg", tf.svg, "Write an SVG rendering");
  tighten_cmd->add_option("--json", tf.json, "Write the result record here instead of stdout");
  tighten_cmd->add_option("--kmax", tf.len.k_max, "len family size")->capture_default_str();
  tighten_cmd->add_option("--refine", tf.len.refine, "len bisection rounds")->capture_default_str();
  tighten_cmd->add_option("-j,--jobs", tf.jobs, "Instances processed in parallel")->capture_default_str();

  auto* homotopic_cmd = app.add_subcommand("homotopic", "Are the paths of two instances homotopic?");
  homotopic_cmd->add_option("a", file, "First instance")->required();
  homotopic_cmd->add_option("b", file_b, "Second instance")->required();

  LenOptions lo;
  auto* len_cmd = app.add_subcommand("len", "Evaluate the len functional on an instance path");
  len_cmd->add_option("file", file, "Instance JSON")->required();
  len_cmd->add_option("--kmax", lo.k_max, "Family size")->capture_default_str()->check(CLI::PositiveNumber);
  len_cmd->add_option("--refine", lo.refine, "Bisection rounds")->capture_default_str();

  GenOptions g;
  std::string out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", g.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--holes", g.holes, "Number of holes")->capture_default_str();
  gen_cmd->add_option("--vertices", g.vertices, "Domain vertex budget")->capture_default_str();
  gen_cmd->add_option("--path-vertices", g.path_vertices, "Interior path waypoints")->capture_default_str();
  gen_cmd->add_option("--radius", g.radius, "Outer radius")->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Invalid;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*tighten_cmd) return cmd_tighten(files, tf);
    if (*homotopic_cmd) return cmd_homotopic(file, file_b);
    if (*len_cmd) return cmd_len(file, lo);
    if (*gen_cmd) return cmd_gen(g, out);
  } catch (const Failure& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Defect;
  }
  return Ok;
}
