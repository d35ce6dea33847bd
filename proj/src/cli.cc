// Copyright 2026 The UniDim Authors.
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

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strings.h"
#include "unidim/cli.h"
#include "unidim/corpus.h"
#include "unidim/encoder.h"
#include "unidim/error.h"
#include "unidim/evaluation.h"
#include "unidim/training.h"

namespace unidim {
namespace {

namespace fs = std::filesystem;

std::string Env(const char *name) {
  const char *v = std::getenv(name);
  return v == nullptr ? "" : v;
}

// Mirrors progress lines to the console and to a timestamped log file. The
// log is the only output that carries wall-clock information.
class RunLog {
 public:
  RunLog(std::ostream &out, const fs::path &path) : out_(out) {
    if (!path.empty()) file_.open(path, std::ios::app);
  }

  void Line(const std::string &msg) {
    out_ << msg << "\n";
    if (!file_) return;
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    file_ << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ") << " " << msg << "\n";
  }

 private:
  std::ostream &out_;
  std::ofstream file_;
};

void WriteText(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

std::vector<RelationInstance> LoadInstances(const std::vector<std::string> &paths) {
  if (paths.empty()) throw Error(ErrorCode::kUsage, "no --in file given");
  std::vector<RelationInstance> all;
  for (const std::string &p : paths) {
    for (RelationInstance &inst : ReadInterchangeFile(p)) {
      all.push_back(std::move(inst));
    }
  }
  AssignInstanceIds(all);
  return all;
}

struct EncoderOptions {
  std::string backend = "toy";
  int hidden_dim = 768;
  int max_len = 512;
  std::uint64_t seed = 0;
  std::string pretrained_name = "bert-base-uncased";
  std::string embeddings;

  EncoderConfig Resolve() const {
    EncoderConfig cfg;
    cfg.backend = ParseEncoderBackend(backend);
    cfg.hidden_dim = hidden_dim;
    cfg.max_sequence_length = max_len;
    cfg.seed = seed;
    cfg.pretrained_name = pretrained_name;
    cfg.embeddings_path = embeddings;
    cfg.Validate();
    return cfg;
  }
};

// Options shared by every training subcommand.
struct JobOptions {
  std::vector<std::string> inputs;
  std::string task;
  EncoderOptions encoder;
  TrainConfig cfg;
  std::string selection = "accuracy";
  int min_count = kDefaultMinClassCount;
  std::string out_dir;
  std::string name;
};

void AddEncoderOptions(CLI::App *sub, EncoderOptions &o) {
  sub->add_option("--encoder", o.backend, "toy or pretrained")
      ->capture_default_str();
  sub->add_option("--hidden-dim", o.hidden_dim, "representation width")
      ->capture_default_str();
  sub->add_option("--max-len", o.max_len, "maximum sequence length")
      ->capture_default_str();
  sub->add_option("--encoder-seed", o.seed, "TOY projection seed")
      ->capture_default_str();
  sub->add_option("--pretrained-name", o.pretrained_name,
                  "name of the pretrained encoder")
      ->capture_default_str();
  sub->add_option("--embeddings", o.embeddings,
                  "precomputed embedding file (pretrained backend)");
}

void AddJobOptions(CLI::App *sub, JobOptions &o, const std::string &default_task) {
  o.task = default_task;
  sub->add_option("--in", o.inputs, "interchange file (repeatable)");
  sub->add_option("--task", o.task,
                  "rst, pdtb-explicit, pdtb-implicit or pdtb-total")
      ->capture_default_str();
  AddEncoderOptions(sub, o.encoder);
  TrainConfig &c = o.cfg;
  sub->add_option("--lr", c.learning_rate, "learning rate")->capture_default_str();
  sub->add_option("--batch-size", c.batch_size)->capture_default_str();
  sub->add_option("--epochs", c.max_epochs, "maximum epochs")->capture_default_str();
  sub->add_option("--clip", c.grad_clip_max_norm, "gradient clipping norm")
      ->capture_default_str();
  sub->add_option("--dropout", c.dropout)->capture_default_str();
  sub->add_option("--warmup", c.warmup_steps, "warmup steps")->capture_default_str();
  sub->add_option("--weight-decay", c.weight_decay)->capture_default_str();
  sub->add_option("--dim-embed", c.dim_embed_size, "dimension embedding size")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "run seed")
      ->envname(kSeedEnv)
      ->capture_default_str();
  sub->add_option("--selection", o.selection, "accuracy or macro-f1")
      ->capture_default_str();
  sub->add_option("--min-count", o.min_count,
                  "drop classes with fewer training instances")
      ->capture_default_str();
  sub->add_option("--out-dir", o.out_dir, "run directory");
  sub->add_option("--name", o.name, "run name under the output root");
}

fs::path RunDir(const JobOptions &o, const std::string &fallback_name) {
  if (!o.out_dir.empty()) return o.out_dir;
  std::string root = Env(kOutputRootEnv);
  if (root.empty()) root = "runs";
  return fs::path(root) / (o.name.empty() ? fallback_name : o.name);
}

// Snapshot of every resolved option, loadable again with --config.
std::string Snapshot(const CLI::App *sub) {
  return "[" + sub->get_name() + "]\n" + sub->config_to_str(true, false);
}

void LogEnvironment(RunLog &log, const JobOptions &o) {
  const std::string seed_env = Env(kSeedEnv);
  if (!seed_env.empty()) log.Line(std::string(kSeedEnv) + "=" + seed_env);
  log.Line("seed: " + std::to_string(o.cfg.seed));
  const std::string device = Env(kDeviceEnv);
  if (!device.empty() && !internal::EqualsIgnoreCase(device, "cpu")) {
    log.Line(std::string(kDeviceEnv) + "=" + device +
             " requested; only cpu is available, running on cpu");
  } else {
    log.Line(device.empty() ? "device: cpu"
                            : std::string("device: cpu (") + kDeviceEnv + ")");
  }
}

EncodedSplits Prepare(RunLog &log, const JobOptions &o, DatasetSplits splits,
                      const std::string &task) {
  log.Line("splits: train " + std::to_string(splits.train.size()) +
           ", validation " + std::to_string(splits.validation.size()) +
           ", test " + std::to_string(splits.test.size()) + ", classes " +
           std::to_string(splits.class_set.size()));
  const EncoderConfig enc = o.encoder.Resolve();
  log.Line("encoder: " + enc.Fingerprint());
  return EncodeSplits(std::move(splits), task, enc);
}

void LogHistory(RunLog &log, const TrainHistory &h) {
  for (const EpochRecord &e : h.epochs) {
    std::ostringstream line;
    line << "epoch " << e.epoch << ": loss " << std::fixed
         << std::setprecision(4) << e.train_loss << ", validation accuracy "
         << e.validation_accuracy << ", macro-F1 " << e.validation_macro_f1
         << ", " << std::setprecision(2) << e.seconds << "s";
    log.Line(line.str());
  }
  log.Line("selected epoch: " + std::to_string(h.selected_epoch));
}

void WriteReport(RunLog &log, const fs::path &dir,
                 const ClassificationReport &report) {
  WriteText(dir / "report.jsonl", ReportToJsonl(report));
  const std::string table = FormatReportTable(report);
  WriteText(dir / "report.txt", table);
  log.Line("test report:\n" + table);
}

// ---------------------------------------------------------------------------

int CmdConvert(const std::string &framework, const std::string &in,
               const std::string &out_path, std::ostream &out) {
  std::vector<RelationInstance> instances;
  const std::string f = internal::ToLower(framework);
  if (f == "rst") {
    instances = ReadRstDirectory(in);
  } else if (f == "pdtb") {
    instances = ReadPdtbRecords(in);
  } else {
    throw Error(ErrorCode::kUsage, "--framework must be rst or pdtb");
  }
  std::ostringstream buf;
  WriteInterchange(instances, buf);
  WriteText(out_path, buf.str());
  out << "wrote " << instances.size() << " records to " << out_path << "\n";
  return kExitOk;
}

int CmdStats(const std::vector<std::string> &inputs, const std::string &out_path,
             std::ostream &out) {
  const CorpusStats stats = ComputeStats(LoadInstances(inputs));
  std::ostringstream buf;
  WriteStatsTsv(stats, buf);
  if (out_path.empty()) {
    out << buf.str();
  } else {
    WriteText(out_path, buf.str());
    out << "wrote statistics to " << out_path << "\n";
  }
  return kExitOk;
}

int CmdSynth(SyntheticConfig sc, const std::string &framework,
             const std::vector<std::string> &classes,
             const std::string &relation_type, const std::string &out_path,
             std::ostream &out) {
  sc.framework = ParseFramework(internal::ToLower(framework));
  sc.relation_type = ParseRelationType(relation_type);
  for (const std::string &c : classes) {
    for (const std::string &part : internal::Split(c, ',')) {
      const std::string_view t = internal::Trim(part);
      if (!t.empty()) sc.class_set.emplace_back(t);
    }
  }
  if (sc.class_set.empty()) sc.class_set = SyntheticClasses(sc.framework);
  const std::vector<RelationInstance> instances = GenerateSynthetic(sc);
  std::ostringstream buf;
  WriteInterchange(instances, buf);
  WriteText(out_path, buf.str());
  out << "wrote " << instances.size() << " records to " << out_path << "\n";
  return kExitOk;
}

int CmdTrain(const CLI::App *sub, JobOptions o, const std::string &model,
             std::ostream &out) {
  const ModelKind kind = ParseModelKind(model);
  if (kind != ModelKind::kBaseline && kind != ModelKind::kAugmented) {
    throw Error(ErrorCode::kUsage, "--model must be baseline or augmented");
  }
  const Task task = ParseTask(o.task);
  o.cfg.selection_metric = ParseSelectionMetric(o.selection);
  o.cfg.Validate();
  const fs::path dir =
      RunDir(o, "train-" + o.task + "-" + model + "-seed" +
                    std::to_string(o.cfg.seed));
  fs::create_directories(dir);
  RunLog log(out, dir / "log.txt");
  log.Line("run directory: " + dir.string());
  LogEnvironment(log, o);
  const EncodedSplits data = Prepare(
      log, o, FilterAndSplit(LoadInstances(o.inputs), task, o.min_count),
      std::string(TaskName(task)));
  const TrainResult result = Train(kind, data, o.cfg);
  log.Line("trainable parameters: " +
           std::to_string(result.history.trainable_params));
  LogHistory(log, result.history);
  WriteRunDirectory(dir, Snapshot(sub), result);
  if (!data.splits.test.empty()) {
    WriteReport(log, dir, EvaluateClassifier(result.best.model, data));
  }
  return kExitOk;
}

std::vector<const Param *> FrozenParams(const ModelParams &model) {
  std::vector<const Param *> out;
  for (const Param *p : AllParams(model)) {
    if (p->frozen) out.push_back(p);
  }
  return out;
}

int CmdTransfer(const CLI::App *sub, JobOptions o, const std::string &source_path,
                std::ostream &out) {
  if (source_path.empty()) throw Error(ErrorCode::kUsage, "--source-ckpt is required");
  const Task task = ParseTask(o.task);
  o.cfg.selection_metric = ParseSelectionMetric(o.selection);
  o.cfg.Validate();
  const Checkpoint source = LoadCheckpoint(source_path);
  const fs::path dir = RunDir(o, "transfer-" + o.task + "-seed" +
                                     std::to_string(o.cfg.seed));
  fs::create_directories(dir);
  RunLog log(out, dir / "log.txt");
  log.Line("run directory: " + dir.string());
  log.Line("source checkpoint: " + source_path);
  LogEnvironment(log, o);
  std::uint64_t before = 0;
  if (const auto *a = std::get_if<AugmentedClassifierParams>(&source.model)) {
    ModelParams body_only = *a;
    std::vector<const Param *> body;
    for (const Param *p : AllParams(body_only)) {
      if (p->name.rfind("classifier.", 0) != 0) body.push_back(p);
    }
    before = HashParams(body);
  }
  const EncodedSplits data = Prepare(
      log, o, FilterAndSplit(LoadInstances(o.inputs), task, o.min_count),
      std::string(TaskName(task)));
  const TrainResult result = TrainTransfer(source, data, o.cfg);
  log.Line("trainable parameters: " +
           std::to_string(result.history.trainable_params));
  LogHistory(log, result.history);
  std::ostringstream hashes;
  hashes << std::hex << std::setfill('0') << "frozen body hash before: "
         << std::setw(16) << before << ", after: " << std::setw(16)
         << HashParams(FrozenParams(result.best.model));
  log.Line(hashes.str());
  WriteRunDirectory(dir, Snapshot(sub), result);
  if (!data.splits.test.empty()) {
    WriteReport(log, dir, EvaluateClassifier(result.best.model, data));
  }
  return kExitOk;
}

int CmdAblate(const CLI::App *sub, JobOptions o,
              const std::vector<std::string> &removals, std::ostream &out) {
  const Task task = ParseTask(o.task);
  o.cfg.selection_metric = ParseSelectionMetric(o.selection);
  o.cfg.Validate();
  // Each --remove value is one run; '+' or ',' joins groups inside a run.
  std::vector<std::vector<std::string>> runs;
  for (const std::string &r : removals) {
    std::vector<std::string> groups;
    std::string flat = r;
    std::replace(flat.begin(), flat.end(), '+', ',');
    for (const std::string &g : internal::Split(flat, ',')) {
      const std::string_view t = internal::Trim(g);
      if (t.empty()) continue;
      AblationGroup(t);  // validates the name
      groups.emplace_back(t);
    }
    runs.push_back(std::move(groups));
  }
  if (runs.empty()) runs.push_back({});

  const fs::path dir =
      RunDir(o, "ablate-" + o.task + "-seed" + std::to_string(o.cfg.seed));
  fs::create_directories(dir);
  RunLog log(out, dir / "log.txt");
  log.Line("run directory: " + dir.string());
  LogEnvironment(log, o);
  const EncodedSplits data = Prepare(
      log, o, FilterAndSplit(LoadInstances(o.inputs), task, o.min_count),
      std::string(TaskName(task)));
  if (data.splits.test.empty()) {
    throw Error(ErrorCode::kEmptySplit, "ablation needs a test split");
  }
  const TrainResult full_run = Train(ModelKind::kAugmented, data, o.cfg);
  const ClassificationReport full = EvaluateClassifier(full_run.best.model, data);
  log.Line("full model test accuracy: " + std::to_string(full.accuracy));
  WriteText(dir / "config.txt", Snapshot(sub));
  WriteText(dir / "report.jsonl", ReportToJsonl(full));
  std::vector<AblationResult> results;
  std::string jsonl;
  for (const std::vector<std::string> &groups : runs) {
    AblationResult r = RunAblation(data, groups, o.cfg, full);
    log.Line("removed {" + internal::Join(groups, ",") +
             "}: test accuracy " + std::to_string(r.ablated.accuracy));
    jsonl += AblationToJsonl(r);
    results.push_back(std::move(r));
  }
  WriteText(dir / "ablation.jsonl", jsonl);
  const std::string table = FormatAblationTable(results);
  WriteText(dir / "ablation.txt", table);
  log.Line("ablation:\n" + table);
  return kExitOk;
}

// Splits each framework by its own rules and pools them.
DatasetSplits DimensionSplits(const std::vector<RelationInstance> &instances,
                              const std::string &task_name) {
  std::vector<Task> tasks;
  if (task_name == "all") {
    bool rst = false, pdtb = false;
    for (const RelationInstance &inst : instances) {
      (inst.framework == Framework::kRst ? rst : pdtb) = true;
    }
    if (rst) tasks.push_back(Task::kRst);
    if (pdtb) tasks.push_back(Task::kPdtbTotal);
  } else {
    tasks.push_back(ParseTask(task_name));
  }
  DatasetSplits pooled;
  std::set<std::string> classes;
  for (Task task : tasks) {
    DatasetSplits s = FilterAndSplit(instances, task, 0);
    for (auto *part : {&s.train, &s.validation, &s.test}) {
      std::vector<RelationInstance> &dst =
          part == &s.train ? pooled.train
                           : (part == &s.validation ? pooled.validation
                                                    : pooled.test);
      dst.insert(dst.end(), part->begin(), part->end());
    }
    classes.insert(s.class_set.begin(), s.class_set.end());
  }
  pooled.class_set.assign(classes.begin(), classes.end());
  return pooled;
}

int CmdPredictDims(const CLI::App *sub, JobOptions o, bool train, bool eval,
                   const std::string &model_path, std::ostream &out) {
  if (train == eval) {
    throw Error(ErrorCode::kUsage, "give exactly one of --train and --eval");
  }
  if (eval && model_path.empty()) {
    throw Error(ErrorCode::kUsage, "--eval needs --model");
  }
  o.cfg.selection_metric = ParseSelectionMetric(o.selection);
  o.cfg.Validate();
  const fs::path dir = RunDir(o, std::string("predict-dims-") +
                                     (train ? "train" : "eval") + "-seed" +
                                     std::to_string(o.cfg.seed));
  fs::create_directories(dir);
  RunLog log(out, dir / "log.txt");
  log.Line("run directory: " + dir.string());
  LogEnvironment(log, o);
  const EncodedSplits data =
      Prepare(log, o, DimensionSplits(LoadInstances(o.inputs), o.task), o.task);
  ModelParams model;
  if (train) {
    const TrainResult result = Train(ModelKind::kDimPredictor, data, o.cfg);
    LogHistory(log, result.history);
    WriteRunDirectory(dir, Snapshot(sub), result);
    model = result.best.model;
  } else {
    model = LoadCheckpoint(model_path).model;
    WriteText(dir / "config.txt", Snapshot(sub));
  }
  if (data.splits.test.empty()) {
    throw Error(ErrorCode::kEmptySplit, "no test instances to report on");
  }
  const std::vector<DimensionReportRow> rows = EvaluateDimPredictor(model, data);
  WriteText(dir / "dims_report.jsonl", DimensionReportToJsonl(rows));
  const std::string table = FormatDimensionTable(rows);
  WriteText(dir / "dims_report.txt", table);
  log.Line("dimension prediction:\n" + table);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app("Relation classification with unified discourse dimensions",
               "unidim");
  app.set_config("--config", "", "key=value file; [subcommand] sections");
  app.require_subcommand(1);

  // convert
  std::string conv_framework, conv_in, conv_out;
  CLI::App *convert =
      app.add_subcommand("convert", "Convert RST .dis or PDTB files to interchange");
  convert->fallthrough();
  convert->add_option("--framework", conv_framework, "rst or pdtb")->required();
  convert->add_option("--in", conv_in, "input directory or file")->required();
  convert->add_option("--out", conv_out, "output interchange file")->required();

  // stats
  std::vector<std::string> stats_in;
  std::string stats_out;
  CLI::App *stats = app.add_subcommand("stats", "Dimension distributions");
  stats->fallthrough();
  stats->add_option("--in", stats_in, "interchange file (repeatable)")->required();
  stats->add_option("--out", stats_out, "TSV output (default stdout)");

  // synth
  SyntheticConfig sc;
  std::string synth_framework = "rst", synth_type = "Implicit", synth_out;
  std::vector<std::string> synth_classes;
  CLI::App *synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->fallthrough();
  synth->add_option("--framework", synth_framework, "rst or pdtb")
      ->capture_default_str();
  synth->add_option("--classes", synth_classes,
                    "class labels (comma separated; default all)");
  synth->add_option("--n", sc.n_per_class, "training instances per class")
      ->capture_default_str();
  synth->add_option("--validation-n", sc.validation_per_class,
                    "validation instances per class (PDTB)")
      ->capture_default_str();
  synth->add_option("--test-n", sc.test_per_class, "test instances per class")
      ->capture_default_str();
  synth->add_option("--seed", sc.seed)->envname(kSeedEnv)->capture_default_str();
  synth->add_option("--cue-rate", sc.cue_rate)->capture_default_str();
  synth->add_option("--arg-tokens", sc.arg_tokens)->capture_default_str();
  synth->add_option("--vocab", sc.vocabulary_size)->capture_default_str();
  synth->add_flag("--profile-tokens", sc.profile_tokens,
                  "add one token per dimension value");
  synth->add_option("--relation-type", synth_type, "Implicit or Explicit (PDTB)")
      ->capture_default_str();
  synth->add_option("--out", synth_out, "output interchange file")->required();

  // train
  JobOptions train_opts;
  std::string train_model = "augmented";
  CLI::App *train = app.add_subcommand("train", "Train a relation classifier");
  train->fallthrough();
  AddJobOptions(train, train_opts, "rst");
  train->add_option("--model", train_model, "baseline or augmented")
      ->capture_default_str();

  // transfer
  JobOptions transfer_opts;
  transfer_opts.cfg = TrainConfig::Transfer();
  std::string source_ckpt;
  CLI::App *transfer =
      app.add_subcommand("transfer", "Train a new head over a frozen PDTB model");
  transfer->fallthrough();
  AddJobOptions(transfer, transfer_opts, "rst");
  transfer->add_option("--source-ckpt", source_ckpt,
                       "augmented checkpoint trained on pdtb-total");
  transfer->add_option("--target", transfer_opts.task, "alias of --task");

  // ablate
  JobOptions ablate_opts;
  std::vector<std::string> removals;
  CLI::App *ablate = app.add_subcommand("ablate", "Dimension ablation runs");
  ablate->fallthrough();
  AddJobOptions(ablate, ablate_opts, "rst");
  ablate->add_option("--remove", removals,
                     "pol|bop|soc|impl|temp|add, one run per value");

  // predict-dims
  JobOptions dims_opts;
  dims_opts.cfg = TrainConfig::DimPredictor();
  bool dims_train = false, dims_eval = false;
  std::string dims_model;
  CLI::App *dims =
      app.add_subcommand("predict-dims", "Train or evaluate the dimension predictor");
  dims->fallthrough();
  AddJobOptions(dims, dims_opts, "all");
  dims->add_flag("--train", dims_train, "train a predictor");
  dims->add_flag("--eval", dims_eval, "evaluate --model");
  dims->add_option("--model", dims_model, "predictor checkpoint");

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error[" << ErrorCodeName(ErrorCode::kUsage) << "]: " << e.what()
        << "\n";
    return kExitUsage;
  }

  try {
    if (convert->parsed()) return CmdConvert(conv_framework, conv_in, conv_out, out);
    if (stats->parsed()) return CmdStats(stats_in, stats_out, out);
    if (synth->parsed()) {
      return CmdSynth(sc, synth_framework, synth_classes, synth_type, synth_out,
                      out);
    }
    if (train->parsed()) return CmdTrain(train, train_opts, train_model, out);
    if (transfer->parsed()) {
      return CmdTransfer(transfer, transfer_opts, source_ckpt, out);
    }
    if (ablate->parsed()) return CmdAblate(ablate, ablate_opts, removals, out);
    if (dims->parsed()) {
      return CmdPredictDims(dims, dims_opts, dims_train, dims_eval, dims_model,
                            out);
    }
  } catch (const Error &e) {
    err << "error[" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kUsage ||
                       e.code() == ErrorCode::kUnknownDimension;
    return usage ? kExitUsage : kExitError;
  } catch (const fs::filesystem_error &e) {
    err << "error[" << ErrorCodeName(ErrorCode::kIo) << "]: " << e.what() << "\n";
    return kExitError;
  }
  err << "error[" << ErrorCodeName(ErrorCode::kUsage) << "]: no subcommand\n";
  return kExitUsage;
}

}  // namespace unidim
