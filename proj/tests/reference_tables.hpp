#pragma once

// Reference census rows, transcribed cell by cell. Each row is
// {members, rank, middle length, class, |XM/Z|, γ2, γ3, ...}.

#include <string>
#include <vector>

namespace ref {

using Row = std::vector<std::string>;

inline const std::vector<Row>& table1() {
  static const std::vector<Row> rows = {
      {"3", "[8,1]", "0", "0", "1", "[1,1]"},
      {"2", "[8,3]", "3", "0", "2", "[4,2]", "[2,1]"},
  };
  return rows;
}

inline const std::vector<Row>& table3() {
  static const std::vector<Row> rows = {
      {"1", "[18,1]", "4.17", "3.17", "0", "[18,1]", "[9,1]"},
      {"2", "[18,2]", "0.00", "0.00", "1", "[1,1]"},
      {"1", "[18,3]", "2.58", "1.58", "0", "[6,1]", "[3,1]"},
      {"1", "[18,4]", "4.17", "3.17", "0", "[18,4]", "[9,2]"},
  };
  return rows;
}

inline const std::vector<Row>& table2() {
  static const std::vector<Row> rows = {
      {"37", "[0,0]", "[0,0]", "1", "[1,1]"},
      {"79", "[2,1]", "[0,0]", "2", "[2,2]", "[2,1]"},
      {"18", "[3,1]", "[1,0]", "3", "[4,2]", "[4,1]", "[2,1]"},
      {"8", "[3,2]", "[1,0]", "3", "[4,4]", "[4,1]", "[2,1]"},
      {"14", "[0,3]", "[0,0]", "2", "[1,4]", "[1,2]"},
      {"42", "[2,3]", "[0,0]", "2", "[2,4]", "[2,2]"},
      {"12", "[3,3]", "[1,0]", "3", "[4,4]", "[4,2]", "[2,1]"},
      {"8", "[3,3]", "[1,0]", "3", "[4,4]", "[4,2]", "[2,1]"},
      {"4", "[3,3]", "[1,0]", "3", "[4,4]", "[4,2]", "[2,1]"},
      {"4", "[3,2]", "[1,0]", "3", "[4,4]", "[4,1]", "[2,1]"},
      {"10", "[3,2]", "[0,0]", "2", "[2,4]", "[4,1]"},
      {"15", "[3,2]", "[0,0]", "2", "[4,4]", "[2,1]"},
      {"10", "[3,3]", "[0,0]", "2", "[2,4]", "[4,2]"},
      {"2", "[3,3]", "[1,1]", "3", "[4,8]", "[4,2]", "[2,1]"},
      {"15", "[3,3]", "[0,0]", "2", "[4,4]", "[2,2]"},
      {"6", "[2,3]", "[0,0]", "2", "[2,4]", "[2,2]"},
      {"2", "[3,3]", "[1,1]", "3", "[4,8]", "[4,2]", "[2,1]"},
      {"2", "[3,3]", "[0,0]", "2", "[4,4]", "[2,2]"},
      {"2", "[3,2]", "[0,0]", "2", "[4,4]", "[2,1]"},
      {"4", "[3,2]", "[1,0]", "3", "[4,4]", "[4,1]", "[2,1]"},
  };
  return rows;
}

inline const std::vector<Row>& table4() {
  static const std::vector<Row> rows = {
      {"1", "[4.17,4.17]", "[3.17,3.17]", "0", "[18,18]", "[9,9]"},
      {"2", "[0.00,4.17]", "[0.00,3.17]", "0", "[1,18]", "[1,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"20", "[0.00,0.00]", "[0.00,0.00]", "1", "[1,1]"},
      {"2", "[3.17,2.58]", "[3.17,0.00]", "0", "[9,6]", "[9,1]"},
      {"16", "[3.17,1.58]", "[0.00,0.00]", "2", "[3,3]", "[3,1]"},
      {"2", "[3.17,1.00]", "[3.17,0.00]", "0", "[9,2]", "[9,1]"},
      {"4", "[0.00,2.58]", "[0.00,1.58]", "0", "[1,6]", "[1,3]"},
      {"1", "[3.17,4.17]", "[3.17,1.58]", "0", "[9,18]", "[9,3]"},
      {"2", "[3.17,4.17]", "[0.00,1.58]", "0", "[3,18]", "[3,3]", "[1,3]"},
      {"1", "[3.17,2.58]", "[3.17,1.58]", "0", "[9,6]", "[9,3]"},
      {"1", "[3.17,4.17]", "[3.17,1.58]", "0", "[9,18]", "[9,3]"},
      {"1", "[3.17,2.58]", "[3.17,1.58]", "0", "[9,6]", "[9,3]"},
      {"2", "[0.00,4.17]", "[0.00,3.17]", "0", "[1,18]", "[1,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"2", "[2.58,2.58]", "[1.58,1.58]", "0", "[6,6]", "[3,3]"},
      {"1", "[4.17,4.17]", "[3.17,3.17]", "0", "[18,18]", "[9,9]"},
      {"1", "[1.58,4.17]", "[1.58,3.17]", "0", "[3,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[9,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[1.58,4.17]", "[1.58,3.17]", "0", "[3,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[3,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"4", "[1.58,1.00]", "[1.58,0.00]", "0", "[3,2]", "[3,1]"},
      {"2", "[3.17,2.58]", "[3.17,0.00]", "0", "[9,6]", "[9,1]"},
      {"2", "[3.17,1.00]", "[3.17,0.00]", "0", "[9,2]", "[9,1]"},
      {"2", "[1.58,2.58]", "[1.58,1.58]", "0", "[3,6]", "[3,3]"},
      {"1", "[3.17,4.17]", "[3.17,1.58]", "0", "[9,18]", "[9,3]"},
      {"1", "[3.17,2.58]", "[3.17,1.58]", "0", "[9,6]", "[9,3]"},
      {"2", "[3.17,2.58]", "[1.58,1.58]", "0", "[9,6]", "[3,3]"},
      {"1", "[3.17,2.58]", "[1.58,1.58]", "0", "[3,6]", "[9,3]"},
      {"2", "[1.58,2.58]", "[1.58,1.58]", "0", "[3,6]", "[3,3]"},
      {"1", "[3.17,4.17]", "[3.17,1.58]", "0", "[9,18]", "[9,3]"},
      {"1", "[3.17,2.58]", "[3.17,1.58]", "0", "[9,6]", "[9,3]"},
      {"1", "[1.58,4.17]", "[1.58,3.17]", "0", "[3,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[9,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[3,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[1.58,4.17]", "[1.58,3.17]", "0", "[3,18]", "[3,9]"},
      {"1", "[3.17,4.17]", "[1.58,3.17]", "0", "[3,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
      {"1", "[3.17,4.17]", "[3.17,3.17]", "0", "[9,18]", "[9,9]"},
  };
  return rows;
}

}  // namespace ref
