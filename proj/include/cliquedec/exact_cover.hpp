#pragma once

/**
 * Generic exact-cover solver (Algorithm X on dancing links). Each row covers
 * a set of columns; a solution is a set of rows covering every column
 * exactly once. Branches on the column with the fewest remaining rows.
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliquedec/bigint.hpp"

namespace cliquedec {

class ExactCover {
 public:
  explicit ExactCover(int columns) : columns_(columns) {
    if (columns < 0) throw std::invalid_argument("exact cover: negative column count");
    // Node 0 is the root header; nodes 1..columns are column headers.
    const int headers = columns + 1;
    left_.resize(headers);
    right_.resize(headers);
    up_.resize(headers);
    down_.resize(headers);
    column_.resize(headers);
    row_.assign(headers, -1);
    size_.assign(headers, 0);
    for (int i = 0; i < headers; ++i) {
      left_[i] = i == 0 ? columns : i - 1;
      right_[i] = i == columns ? 0 : i + 1;
      up_[i] = down_[i] = column_[i] = i;
    }
  }

  auto column_count() const -> int { return columns_; }
  auto row_count() const -> int { return rows_; }

  // Adds a row over the given (distinct) columns; returns its index.
  auto add_row(std::span<const int> columns) -> int {
    const int row = rows_++;
    int first = -1;
    for (int c : columns) {
      if (c < 0 || c >= columns_) throw std::invalid_argument("exact cover: column out of range");
      const int header = c + 1;
      const int node = static_cast<int>(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[header]);
      down_.push_back(header);
      column_.push_back(header);
      row_.push_back(row);
      size_.push_back(0);
      down_[up_[header]] = node;
      up_[header] = node;
      ++size_[header];
      if (first < 0) {
        first = node;
      } else {
        left_[node] = left_[first];
        right_[node] = first;
        right_[left_[first]] = node;
        left_[first] = node;
      }
    }
    return row;
  }

  // Calls visit(span of row indices) per solution. visit returns false to
  // stop. Returns the number of solutions visited.
  template <typename Visit>
  auto for_each_solution(Visit&& visit) -> BigInt {
    BigInt count = 0;
    std::vector<int> chosen;
    bool stop = false;
    search(chosen, count, stop, visit);
    return count;
  }

  auto count_solutions() -> BigInt {
    return for_each_solution([](std::span<const int>) { return true; });
  }

 private:
  auto cover(int header) -> void {
    right_[left_[header]] = right_[header];
    left_[right_[header]] = left_[header];
    for (int i = down_[header]; i != header; i = down_[i])
      for (int j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --size_[column_[j]];
      }
  }

  auto uncover(int header) -> void {
    for (int i = up_[header]; i != header; i = up_[i])
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[column_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    right_[left_[header]] = header;
    left_[right_[header]] = header;
  }

  template <typename Visit>
  auto search(std::vector<int>& chosen, BigInt& count, bool& stop, Visit& visit) -> void {
    if (right_[0] == 0) {
      ++count;
      if (!visit(std::span<const int>(chosen))) stop = true;
      return;
    }
    int best = right_[0];
    for (int c = right_[best]; c != 0; c = right_[c])
      if (size_[c] < size_[best]) best = c;
    if (size_[best] == 0) return;

    cover(best);
    for (int r = down_[best]; r != best && !stop; r = down_[r]) {
      chosen.push_back(row_[r]);
      for (int j = right_[r]; j != r; j = right_[j]) cover(column_[j]);
      search(chosen, count, stop, visit);
      for (int j = left_[r]; j != r; j = left_[j]) uncover(column_[j]);
      chosen.pop_back();
    }
    uncover(best);
  }

  int columns_ = 0;
  int rows_ = 0;
  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
};

}  // namespace cliquedec
