//
// Copyright 2026 The bias-kit Authors
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
//

#include "biaskit/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "biaskit/conll.h"
#include "biaskit/gender_swap.h"
#include "biaskit/metrics.h"
#include "biaskit/resources.h"
#include "biaskit/rule_mining.h"
#include "biaskit/text.h"
#include "biaskit/winogen.h"
#include "json.hpp"

namespace biaskit {
namespace {

using Json = nlohmann::json;

// Errors caused by the user's input rather than by the toolkit.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  uint64_t seed = 0;
  int iterations = 10000;

  std::string input;
  std::string output;
  std::string dict;
  bool no_anonymize = false;
  bool all_entity_types = false;

  int min_support = 1;

  std::string templates;
  std::string occupations;
  std::string out_prefix;
  std::string pairing = "cross";

  std::string key;
  std::string response;
  std::string challenge;
  std::vector<double> f1_pair;

  std::string gazetteer;
};

std::string DataFile(const std::string& name) { return DataDir() + "/" + name; }

std::string Pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", RoundHalfUp1(100.0 * fraction));
  return buf;
}

std::string OneDecimal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", RoundHalfUp1(value));
  return buf;
}

Json TripleJson(const ScoreTriple& t) {
  return Json{{"P", RoundHalfUp1(100.0 * t.precision)},
              {"R", RoundHalfUp1(100.0 * t.recall)},
              {"F1", RoundHalfUp1(100.0 * t.f1)}};
}

Corpus LoadCorpus(const std::string& path) {
  return ParseConll(ReadFile(path));
}

void Emit(const Options& opt, std::ostream& out, const Json& json,
          const std::string& text) {
  if (opt.format == "json") {
    out << json.dump(2) << "\n";
  } else {
    out << text;
  }
}

// ---------------------------------------------------------------- validate

int CmdValidate(const Options& opt, std::ostream& out) {
  Json report{{"file", opt.input}, {"ok", false}, {"errors", Json::array()}};
  std::string text;
  try {
    text = ReadFile(opt.input);
  } catch (const std::runtime_error& e) {
    report["errors"].push_back(
        {{"kind", "FileError"}, {"line", 0}, {"message", e.what()}});
    Emit(opt, out, report, std::string("error: ") + e.what() + "\n");
    return kExitInputError;
  }
  try {
    Corpus corpus = ParseConll(text);
    size_t sentences = 0;
    size_t tokens = 0;
    size_t chains = 0;
    size_t mentions = 0;
    for (const DocumentPart& part : corpus.parts) {
      sentences += part.sentences.size();
      for (const Sentence& s : part.sentences) tokens += s.tokens.size();
      for (const Chain& c : ExtractChains(part)) {
        ++chains;
        mentions += c.mentions.size();
      }
    }
    report["parts"] = corpus.parts.size();
    report["sentences"] = sentences;
    report["tokens"] = tokens;
    report["chains"] = chains;
    report["mentions"] = mentions;
    if (corpus.parts.empty()) {
      report["errors"].push_back({{"kind", "EmptyInput"},
                                  {"line", 0},
                                  {"message", "no documents found"}});
      Emit(opt, out, report, opt.input + ": error: no documents found\n");
      return kExitInputError;
    }
    report["ok"] = true;
    Emit(opt, out, report,
         opt.input + ": ok (" + std::to_string(corpus.parts.size()) +
             " parts, " + std::to_string(sentences) + " sentences, " +
             std::to_string(tokens) + " tokens, " + std::to_string(chains) +
             " chains, " + std::to_string(mentions) + " mentions)\n");
    return kExitOk;
  } catch (const ConllError& e) {
    report["errors"].push_back({{"kind", ConllErrorKindName(e.kind())},
                                {"line", e.line()},
                                {"message", e.what()}});
    Emit(opt, out, report, opt.input + ": " + e.what() + "\n");
    return kExitInputError;
  }
}

// ----------------------------------------------------------------- augment

int CmdAugment(const Options& opt, std::ostream& out) {
  const std::string dict_path =
      opt.dict.empty() ? DataFile("swap_dictionary.tsv") : opt.dict;
  const SwapDictionary dict = ParseDictionary(ReadFile(dict_path));
  const Corpus corpus = LoadCorpus(opt.input);
  AugmentOptions options;
  options.anonymize = !opt.no_anonymize;
  options.anonymize_options.all_types = opt.all_entity_types;
  const Corpus augmented = AugmentCorpus(corpus, dict, options);
  WriteFile(opt.output, WriteConll(augmented));

  size_t changed = 0;
  const size_t n = corpus.parts.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = corpus.parts[i].sentences;
    const auto& b = augmented.parts[n + i].sentences;
    for (size_t s = 0; s < a.size(); ++s) {
      for (size_t t = 0; t < a[s].tokens.size(); ++t) {
        changed += a[s].tokens[t].word() != b[s].tokens[t].word() ? 1 : 0;
      }
    }
  }
  Json json{{"input_parts", n},
            {"output_parts", augmented.parts.size()},
            {"changed_tokens", changed},
            {"anonymized", options.anonymize},
            {"output", opt.output}};
  Emit(opt, out, json,
       "wrote " + std::to_string(augmented.parts.size()) + " parts (" +
           std::to_string(n) + " original + " + std::to_string(n) +
           " swapped, " + std::to_string(changed) + " tokens changed) to " +
           opt.output + "\n");
  return kExitOk;
}

// -------------------------------------------------------------- mine-rules

int CmdMineRules(const Options& opt, std::ostream& out) {
  const std::vector<AnnotatedSpanPair> pairs =
      ParseSpanPairs(ReadFile(opt.input));
  size_t skipped = 0;
  for (const AnnotatedSpanPair& p : pairs) {
    skipped += ComputeWordDifference(p).skipped ? 1 : 0;
  }
  const SwapDictionary dict =
      MineRules(pairs, MiningOptions{opt.min_support});
  WriteFile(opt.output, FormatDictionary(dict));
  Json json{{"pairs", pairs.size()},
            {"skipped_pairs", skipped},
            {"rules", dict.rules.size()},
            {"min_support", opt.min_support},
            {"output", opt.output}};
  Emit(opt, out, json,
       "mined " + std::to_string(dict.rules.size()) + " rules from " +
           std::to_string(pairs.size()) + " pairs (" +
           std::to_string(skipped) + " skipped for unequal length) into " +
           opt.output + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- generate

Json CountJson(const std::vector<WinoExample>& examples) {
  std::map<std::string, int> counts;
  for (const WinoExample& ex : examples) {
    ++counts[std::string(ToString(ex.kind)) + "_" + ToString(ex.condition)];
    ++counts[ToString(ex.condition)];
  }
  Json j{{"examples", examples.size()}};
  for (const char* k : {"pro", "anti", "type1_pro", "type1_anti", "type2_pro",
                        "type2_anti"}) {
    j[k] = counts[k];
  }
  return j;
}

int CmdGenerate(const Options& opt, std::ostream& out) {
  const std::string templates_path =
      opt.templates.empty() ? DataFile("templates.txt") : opt.templates;
  const std::string occupations_path =
      opt.occupations.empty() ? DataFile("occupations.csv") : opt.occupations;
  const auto templates = ParseTemplates(ReadFile(templates_path));
  const auto occupations = ParseOccupations(ReadFile(occupations_path));
  PairingStrategy strategy;
  if (opt.pairing == "cross") {
    strategy = PairingStrategy::kCrossGender;
  } else if (opt.pairing == "ring") {
    strategy = PairingStrategy::kRing;
  } else {
    throw InputError("unknown pairing strategy '" + opt.pairing + "'");
  }
  const auto examples = Generate(templates, occupations, strategy, opt.seed);
  const DevTestSplit split = SplitDevTest(examples, opt.seed);

  Json files = Json::array();
  for (const auto& [name, part] :
       {std::pair<std::string, const std::vector<WinoExample>*>{"dev",
                                                                &split.dev},
        {"test", &split.test}}) {
    const std::string conll = opt.out_prefix + "." + name + ".conll";
    const std::string jsonl = opt.out_prefix + "." + name + ".jsonl";
    WriteFile(conll, WriteConll(ToConll(*part)));
    WriteFile(jsonl, ToJsonl(*part));
    files.push_back(conll);
    files.push_back(jsonl);
  }
  Json json{{"seed", opt.seed},
            {"templates", templates.size()},
            {"occupations", occupations.size()},
            {"examples", examples.size()},
            {"dev", CountJson(split.dev)},
            {"test", CountJson(split.test)},
            {"files", files}};
  std::string text = "generated " + std::to_string(examples.size()) +
                     " examples from " + std::to_string(templates.size()) +
                     " templates and " + std::to_string(occupations.size()) +
                     " occupations (seed " + std::to_string(opt.seed) + ")\n";
  for (const char* half : {"dev", "test"}) {
    const Json& c = json[half];
    text += std::string("  ") + half + ": " +
            std::to_string(c["examples"].get<int>()) + " examples, pro " +
            std::to_string(c["pro"].get<int>()) + ", anti " +
            std::to_string(c["anti"].get<int>()) + "\n";
  }
  for (const auto& f : files) text += "  wrote " + f.get<std::string>() + "\n";
  Emit(opt, out, json, text);
  return kExitOk;
}

// ------------------------------------------------------------------- score

Json ConditionJson(const ConditionScore& s) {
  return Json{{"f1", RoundHalfUp1(s.f1)},
              {"accuracy", RoundHalfUp1(100.0 * s.accuracy.accuracy)},
              {"examples", s.accuracy.total}};
}

Json GapJson(double pro, double anti) {
  // Gap of the reported (rounded) F1 values.
  const BiasGap gap = ComputeBiasGap(RoundHalfUp1(pro), RoundHalfUp1(anti));
  return Json{{"avg", RoundHalfUp1(gap.avg)}, {"diff", RoundHalfUp1(gap.diff)}};
}

int CmdScore(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.f1_pair.empty()) {
    if (opt.f1_pair.size() != 2) {
      throw InputError("--f1-pair takes exactly two values: PRO ANTI");
    }
    Json gap = GapJson(opt.f1_pair[0], opt.f1_pair[1]);
    Json json{{"bias",
               {{"pro", RoundHalfUp1(opt.f1_pair[0])},
                {"anti", RoundHalfUp1(opt.f1_pair[1])},
                {"avg", gap["avg"]},
                {"diff", gap["diff"]}}}};
    Emit(opt, out, json,
         "pro " + OneDecimal(opt.f1_pair[0]) + "  anti " +
             OneDecimal(opt.f1_pair[1]) + "  avg " +
             OneDecimal(gap["avg"].get<double>()) + "  |diff| " +
             OneDecimal(gap["diff"].get<double>()) + "\n");
    return kExitOk;
  }
  if (opt.key.empty() || opt.response.empty()) {
    throw InputError("score needs KEY and RESPONSE files (or --f1-pair)");
  }
  const Corpus key = LoadCorpus(opt.key);
  const Corpus response = LoadCorpus(opt.response);
  Json json;
  std::string text;
  Json warnings = Json::array();
  MetricSuite overall;
  std::optional<BiasReport> bias;
  if (!opt.challenge.empty()) {
    const auto examples = ParseJsonl(ReadFile(opt.challenge));
    bias = ScoreChallenge(examples, key, response,
                          BiasOptions{opt.iterations, opt.seed});
    overall = bias->overall;
  } else {
    overall = ScoreAll(ClustersFromCorpus(key), ClustersFromCorpus(response));
  }
  json["muc"] = TripleJson(overall.muc);
  json["bcub"] = TripleJson(overall.b_cubed);
  json["ceafe"] = TripleJson(overall.ceaf_e);
  json["conll_avg"] = RoundHalfUp1(100.0 * overall.conll_average);
  for (const auto& [name, t] :
       {std::pair<const char*, const ScoreTriple*>{"MUC", &overall.muc},
        {"B3", &overall.b_cubed},
        {"CEAF-e", &overall.ceaf_e}}) {
    text += std::string(name) + "\tR " + Pct(t->recall) + "\tP " +
            Pct(t->precision) + "\tF1 " + Pct(t->f1) + "\n";
  }
  text += "CoNLL\tF1 " + Pct(overall.conll_average) + "\n";

  if (bias) {
    Json b;
    for (const auto& [name, type] :
         {std::pair<const char*, const std::optional<TypeBias>*>{
              "t1", &bias->type1},
          {"t2", &bias->type2}}) {
      if (!*type) continue;
      const TypeBias& tb = **type;
      Json gap = GapJson(tb.pro.f1, tb.anti.f1);
      b[name] = Json{{"pro", ConditionJson(tb.pro)},
                     {"anti", ConditionJson(tb.anti)},
                     {"avg", gap["avg"]},
                     {"diff", gap["diff"]},
                     {"p", tb.p_value}};
      char p[32];
      std::snprintf(p, sizeof(p), "%.4f", tb.p_value);
      text += std::string(name) + "\tpro " + OneDecimal(tb.pro.f1) +
              "\tanti " + OneDecimal(tb.anti.f1) + "\tavg " +
              OneDecimal(gap["avg"].get<double>()) + "\t|diff| " +
              OneDecimal(gap["diff"].get<double>()) + "\tp " + p +
              (tb.p_value < 0.05 ? " *" : "") + "\n";
      for (const ConditionScore* c : {&tb.pro, &tb.anti}) {
        for (const std::string& id : c->accuracy.missing_pronouns) {
          warnings.push_back("MentionNotFound: pronoun of " + id +
                             " is in no response mention");
        }
      }
    }
    json["bias"] = b;
  }
  json["warnings"] = warnings;
  for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << "\n";
  if (!opt.output.empty()) WriteFile(opt.output, json.dump(2) + "\n");
  Emit(opt, out, json, text);
  return kExitOk;
}

// ----------------------------------------------------------------- balance

int CmdBalance(const Options& opt, std::ostream& out) {
  const GenderCountList list = ParseGenderList(ReadFile(opt.input));
  const GenderCountList balanced = BalanceGenderList(list);
  WriteFile(opt.output, FormatGenderList(balanced));
  size_t changed = 0;
  for (size_t i = 0; i < list.entries.size(); ++i) {
    changed += list.entries[i] == balanced.entries[i] ? 0 : 1;
  }
  Json json{{"entries", list.entries.size()},
            {"changed", changed},
            {"output", opt.output}};
  Emit(opt, out, json,
       "balanced " + std::to_string(list.entries.size()) + " phrases (" +
           std::to_string(changed) + " changed) into " + opt.output + "\n");
  return kExitOk;
}

// ----------------------------------------------------------------- analyze

Json StatsJson(const GenderStats& s) {
  return Json{{"gendered_entity_total", s.gendered_total()},
              {"male_chains", s.male_chains},
              {"female_chains", s.female_chains},
              {"male_fraction", s.male_fraction()},
              {"male_jobtitle_rate", s.male_jobtitle_rate()},
              {"female_jobtitle_rate", s.female_jobtitle_rate()}};
}

int CmdAnalyze(const Options& opt, std::ostream& out) {
  const std::string gazetteer_path =
      opt.gazetteer.empty() ? DataFile("job_titles.txt") : opt.gazetteer;
  const auto gazetteer = ParseGazetteer(ReadFile(gazetteer_path));
  const Corpus corpus = LoadCorpus(opt.input);
  const CorpusBiasStats stats = AnalyzeCorpusBias(corpus, gazetteer);
  Json json = StatsJson(stats.totals);
  json["tied_chains"] = stats.tied_chains;
  json["has_gendered_chains"] = stats.has_gendered_chains;
  json["per_genre"] = Json::object();
  for (const auto& [genre, s] : stats.per_genre) {
    json["per_genre"][genre] = StatsJson(s);
  }
  if (!opt.output.empty()) WriteFile(opt.output, json.dump(2) + "\n");

  std::string text;
  if (!stats.has_gendered_chains) {
    text = "no chains headed by gendered pronouns\n";
  } else {
    text = "gendered entities: " +
           std::to_string(stats.totals.gendered_total()) + " (" +
           Pct(stats.totals.male_fraction()) + "% male)\n" +
           "job-title rate: male " + Pct(stats.totals.male_jobtitle_rate()) +
           "%, female " + Pct(stats.totals.female_jobtitle_rate()) + "%\n";
    for (const auto& [genre, s] : stats.per_genre) {
      text += "  " + genre + ": " + std::to_string(s.gendered_total()) +
              " entities, " + Pct(s.male_fraction()) + "% male\n";
    }
  }
  Emit(opt, out, json, text);
  return kExitOk;
}

}  // namespace

std::string DataDir() {
  if (const char* env = std::getenv("BIAS_KIT_DATA"); env && *env) return env;
  return BIAS_KIT_DATA_DIR;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Gender bias auditing and mitigation for coreference data"};
  app.name("bias_kit");
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  };

  CLI::App* validate =
      app.add_subcommand("validate", "Parse a CoNLL file and check invariants");
  validate->add_option("conll", opt.input, "CoNLL file")->required();
  add_common(validate);

  CLI::App* augment = app.add_subcommand(
      "augment", "Write the corpus plus its gender-swapped copy");
  augment->add_option("input", opt.input, "Input CoNLL file")->required();
  augment->add_option("output", opt.output, "Output CoNLL file")->required();
  augment->add_option("--dict", opt.dict,
                      "Swap dictionary TSV (default: bundled)");
  augment->add_flag("--no-anonymize", opt.no_anonymize,
                    "Do not replace person names with placeholders");
  augment->add_flag("--all-entity-types", opt.all_entity_types,
                    "Anonymize every named-entity type, not only PERSON");
  add_common(augment);

  CLI::App* mine = app.add_subcommand(
      "mine-rules", "Mine swap rules from original/edited span pairs");
  mine->add_option("pairs", opt.input, "Span pair TSV")->required();
  mine->add_option("output", opt.output, "Dictionary TSV to write")->required();
  mine->add_option("--min-support", opt.min_support,
                   "Drop candidates seen fewer times")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(mine);

  CLI::App* generate =
      app.add_subcommand("generate", "Generate a challenge set");
  generate->add_option("--out-prefix", opt.out_prefix,
                       "Writes PREFIX.{dev,test}.{conll,jsonl}")
      ->required();
  generate->add_option("--templates", opt.templates,
                       "Template file (default: bundled)");
  generate->add_option("--occupations", opt.occupations,
                       "Occupation CSV (default: bundled)");
  generate->add_option("--pairing", opt.pairing, "Occupation pairing")
      ->check(CLI::IsMember({"cross", "ring"}))
      ->capture_default_str();
  add_common(generate);

  CLI::App* score = app.add_subcommand(
      "score", "Score a response against a key, with optional bias report");
  score->add_option("key", opt.key, "Key CoNLL file");
  score->add_option("response", opt.response, "Response CoNLL file");
  score->add_option("--challenge", opt.challenge,
                    "Challenge JSONL; enables the pro/anti bias report");
  score->add_option("--iterations", opt.iterations,
                    "Randomization test iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  score->add_option("--f1-pair", opt.f1_pair,
                    "Only compute avg/|diff| for a published PRO ANTI pair")
      ->expected(2);
  score->add_option("--output", opt.output, "Also write the JSON report here");
  add_common(score);

  CLI::App* balance =
      app.add_subcommand("balance", "Balance male/female counts of a gender list");
  balance->add_option("input", opt.input, "Gender count list")->required();
  balance->add_option("output", opt.output, "Balanced list to write")
      ->required();
  add_common(balance);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Gender statistics of a coreference corpus");
  analyze->add_option("conll", opt.input, "CoNLL file")->required();
  analyze->add_option("--gazetteer", opt.gazetteer,
                      "Job-title list (default: bundled)");
  analyze->add_option("--output", opt.output, "Also write the JSON report here");
  add_common(analyze);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return CmdValidate(opt, out);
    if (*augment) return CmdAugment(opt, out);
    if (*mine) return CmdMineRules(opt, out);
    if (*generate) return CmdGenerate(opt, out);
    if (*score) return CmdScore(opt, out, err);
    if (*balance) return CmdBalance(opt, out);
    if (*analyze) return CmdAnalyze(opt, out);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace biaskit
