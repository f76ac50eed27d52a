#pragma once

#include <string>
#include <vector>

#include "divkit/types.hpp"

namespace divkit {

enum class InputFormat { csv, json };

InputFormat format_from_name(const std::string& name);

/// Detects csv/json from the file extension; ParameterError when neither.
InputFormat detect_format(const std::string& path);

struct LabeledVector {
    std::string label;
    std::vector<double> values;
};

/// Labeled vectors parsed from one input file, in file order.
struct InputDataset {
    std::vector<LabeledVector> vectors;
    std::string source_path;
    InputFormat format = InputFormat::csv;

    bool contains(const std::string& label) const;
    const LabeledVector& get(const std::string& label) const;
    PointVector point_vector(const std::string& label) const;
};

/// CSV: one vector per row, first column label, remaining columns numeric.
/// JSON: object mapping label -> array of numbers.
/// Labels must be unique, vectors non-empty, every entry finite.
InputDataset parse_input(const std::string& path, InputFormat format);

/// Parses from an in-memory string (the file-based overload delegates here).
InputDataset parse_input_text(const std::string& text, InputFormat format,
                              const std::string& source_path);

} // namespace divkit
