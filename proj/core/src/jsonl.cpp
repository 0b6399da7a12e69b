// SPDX-License-Identifier: Apache-2.0
#include "jts/jsonl.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace jts {
namespace {

using nlohmann::json;

bool is_blank(const std::string& line) {
  for (unsigned char c : line) {
    if (!std::isspace(c)) return false;
  }
  return true;
}

json parse_object(const std::string& line) {
  json j = json::parse(line);  // throws nlohmann parse_error
  if (!j.is_object()) throw std::invalid_argument("record is not a JSON object");
  return j;
}

template <typename T>
std::vector<T> load_records(const std::string& path,
                            const std::function<T(const std::string&)>& parse_line) {
  std::ifstream in(path);
  if (!in) throw JsonlError(path, 0, "cannot open file for reading");
  std::vector<T> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      out.push_back(parse_line(line));
    } catch (const std::exception& e) {
      throw JsonlError(path, line_no, e.what());
    }
  }
  if (in.bad()) throw JsonlError(path, 0, "read failure");
  return out;
}

template <typename T>
void store_records(const std::vector<T>& records, const std::string& path,
                   const std::function<std::string(const T&)>& to_line) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw JsonlError(path, 0, "cannot open file for writing");
  for (const T& r : records) out << to_line(r) << '\n';
  out.flush();
  if (!out) throw JsonlError(path, 0, "write failure");
}

}  // namespace

std::string question_to_json_line(const Question& q) {
  json j;
  j["id"] = q.id;
  j["subset"] = q.subset;
  j["prompt"] = q.prompt;
  j["answerability"] = to_label(q.answerability);
  if (q.reference_answer) j["reference_answer"] = *q.reference_answer;
  if (q.hidden_premise) j["hidden_premise"] = *q.hidden_premise;
  return j.dump();
}

Question question_from_json_line(const std::string& line) {
  const json j = parse_object(line);
  Question q;
  q.id = j.at("id").get<std::string>();
  q.subset = j.value("subset", std::string{});
  q.prompt = j.at("prompt").get<std::string>();
  q.answerability = answerability_from_label(j.at("answerability").get<std::string>());
  if (j.contains("reference_answer") && !j["reference_answer"].is_null()) {
    q.reference_answer = j["reference_answer"].get<std::string>();
  }
  if (j.contains("hidden_premise") && !j["hidden_premise"].is_null()) {
    q.hidden_premise = j["hidden_premise"].get<std::string>();
  }
  if (q.answerability == Answerability::WellDefined && !q.reference_answer) {
    throw std::invalid_argument("well_defined question lacks reference_answer");
  }
  return q;
}

std::string trace_to_json_line(const Trace& t) {
  json j;
  j["question_id"] = t.question_id;
  j["text"] = t.text;
  j["token_count"] = t.token_count;
  if (t.judgment) j["judgment"] = to_string(*t.judgment);
  if (t.final_answer) j["final_answer"] = *t.final_answer;
  if (t.verdict) j["verdict"] = static_cast<int>(*t.verdict);
  if (t.detected) j["detected"] = *t.detected;
  if (t.abstained) j["abstained"] = *t.abstained;
  return j.dump();
}

Trace trace_from_json_line(const std::string& line) {
  const json j = parse_object(line);
  Trace t;
  t.question_id = j.at("question_id").get<std::string>();
  t.text = j.at("text").get<std::string>();
  t.token_count = j.at("token_count").get<std::int64_t>();
  if (t.token_count < 0) throw std::invalid_argument("token_count must be nonnegative");
  if (j.contains("judgment") && !j["judgment"].is_null()) {
    const auto s = j["judgment"].get<std::string>();
    const auto parsed = judgment_from_string(s);
    if (!parsed) throw std::invalid_argument("unknown judgment string: '" + s + "'");
    t.judgment = parsed;
  }
  if (j.contains("final_answer") && !j["final_answer"].is_null()) {
    t.final_answer = j["final_answer"].get<std::string>();
  }
  if (j.contains("verdict") && !j["verdict"].is_null()) {
    const int code = j["verdict"].get<int>();
    const auto v = verdict_from_code(code);
    if (!v) throw std::invalid_argument("verdict code out of range: " + std::to_string(code));
    t.verdict = v;
  }
  if (j.contains("detected") && !j["detected"].is_null()) t.detected = j["detected"].get<bool>();
  if (j.contains("abstained") && !j["abstained"].is_null()) t.abstained = j["abstained"].get<bool>();
  if (t.abstained && *t.abstained && t.verdict && *t.verdict != Verdict::Abstain) {
    throw std::invalid_argument("abstained trace must carry verdict 0");
  }
  return t;
}

std::vector<Question> load_questions(const std::string& path) {
  return load_records<Question>(path, question_from_json_line);
}

void store_questions(const std::vector<Question>& questions, const std::string& path) {
  store_records<Question>(questions, path, question_to_json_line);
}

std::vector<Trace> load_traces(const std::string& path) {
  return load_records<Trace>(path, trace_from_json_line);
}

void store_traces(const std::vector<Trace>& traces, const std::string& path) {
  store_records<Trace>(traces, path, trace_to_json_line);
}

}  // namespace jts
