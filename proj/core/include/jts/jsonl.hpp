// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jts/types.hpp"

namespace jts {

/// I/O or schema failure while reading/writing line-oriented JSON files.
/// `line` is 1-based; 0 means the error is not tied to a specific line.
class JsonlError : public std::runtime_error {
 public:
  JsonlError(std::string path, std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? path + ": " + what
                                     : path + ":" + std::to_string(line) + ": " + what),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// Blank lines are skipped; any other malformed line aborts the whole load.
std::vector<Question> load_questions(const std::string& path);
void store_questions(const std::vector<Question>& questions, const std::string& path);

std::vector<Trace> load_traces(const std::string& path);
void store_traces(const std::vector<Trace>& traces, const std::string& path);

// Single-record forms, used by streaming writers and tests.
std::string question_to_json_line(const Question& q);
Question question_from_json_line(const std::string& line);
std::string trace_to_json_line(const Trace& t);
Trace trace_from_json_line(const std::string& line);

}  // namespace jts
