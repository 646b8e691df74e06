#pragma once

#include <map>
#include <memory>

#include "quatdirac/detail/memo.hpp"
#include "quatdirac/blattner.hpp"
#include "quatdirac/partitions.hpp"

namespace quatdirac::detail {

// Keys are flattened with a length prefix per component.
MemoTable<Int>& lr_table();
MemoTable<std::map<Weight, Int>>& branching_table();
MemoTable<Int>& kostka_table();
MemoTable<Int>& sp_weight_table();
MemoTable<Int>& ind_char_table();
MemoTable<std::shared_ptr<const UsizeSlice>>& usize_slice_table();
MemoTable<Int>& zsharp_tensor_table();

}  // namespace quatdirac::detail
