// Copyright 2026 The s17bench Authors
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

#ifndef S17_RECORD_IO_H
#define S17_RECORD_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include "s17/benchmark.h"

namespace s17 {

constexpr int kCsvSchemaVersion = 1;

/// Header row of the CSV output, without trailing newline.
const std::string &csv_header();

/// One row per record. Reals use %.17g so values round-trip exactly.
void write_csv(std::ostream &out, const std::vector<BenchmarkRecord> &records);
std::string to_csv(const std::vector<BenchmarkRecord> &records);

/// Parses CSV produced by write_csv. Throws std::invalid_argument naming the line on a header
/// mismatch, a wrong schema version or a malformed field.
std::vector<BenchmarkRecord> read_csv(std::istream &in);

/// {"schema_version": 1, "records": [...]} with the same fields as the CSV.
std::string to_json(const std::vector<BenchmarkRecord> &records);

/// Writes to a path; throws std::runtime_error if the file cannot be written.
void write_text_file(const std::string &path, const std::string &content);

}  // namespace s17

#endif
