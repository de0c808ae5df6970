// Copyright 2026 The genmetrics authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genmetrics {

// On-disk element kinds. The numeric values are the dtype byte of the
// file format and must not change.
enum class Dtype : uint8_t { f32 = 1, f64 = 2 };

// Self-describing n-dimensional array, row-major, rank 1..3.
//
// Binary layout (little-endian):
//   magic   "EVGM"            4 bytes
//   version 1                 1 byte
//   dtype   1=f32, 2=f64      1 byte
//   rank                      1 byte
//   dims    rank x uint64     8*rank bytes
//   payload row-major data    elem_size * product(dims) bytes
//
// Elements are held in memory as f64 regardless of the on-disk dtype;
// f32 payloads convert losslessly in both directions.
struct TensorFile {
    Dtype dtype = Dtype::f64;
    std::vector<uint64_t> dims;
    std::vector<double> data;

    uint8_t rank() const { return static_cast<uint8_t>(dims.size()); }
    uint64_t element_count() const;

    // Throws input_error when rank or element count violates the format
    // invariants.
    void validate() const;
};

TensorFile read_tensor(const std::string& path);
void write_tensor(const TensorFile& t, const std::string& path);

// CSV ingestion: `,` separator, `.` decimal point, no quoting. A matrix
// file has one sample per row; a label file has one integer per line.
std::vector<std::vector<double>> read_csv_matrix(const std::string& path, bool skip_header);
std::vector<int64_t> read_csv_labels(const std::string& path, bool skip_header);

} // namespace genmetrics
