#include "fgring/presentation.hpp"

#include <algorithm>

#include "expr_parser.hpp"

namespace fgring {

RingPresentation parse_presentation(std::string_view text) {
  detail::Cursor cur(text);
  if (!cur.accept_word("ring")) cur.fail("expected 'ring'");
  if (!cur.accept_word("Z")) cur.fail("expected coefficient ring 'Z'");
  std::vector<std::string> names;
  if (cur.accept('[')) {
    do {
      std::size_t at = (cur.skip_ws(), cur.pos());
      if (cur.peek() == ',' || cur.peek() == ']') cur.fail("empty variable name");
      std::string name = cur.identifier();
      if (std::find(names.begin(), names.end(), name) != names.end())
        cur.fail_at("duplicate variable '" + name + "'", at);
      names.push_back(std::move(name));
    } while (cur.accept(','));
    cur.expect(']');
  }
  ContextPtr ctx = Context::make(names);
  std::vector<Polynomial> relations;
  if (cur.accept('/')) {
    cur.expect('(');
    do {
      relations.push_back(detail::parse_expr(cur, ctx, MonomialOrder::grevlex()));
    } while (cur.accept(','));
    cur.expect(')');
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return RingPresentation(ctx, std::move(relations));
}

}  // namespace fgring
