//! Java front end: tokenizer, expression parser, assertion scanner and
//! symbol table.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod scan;
pub mod symbols;

pub use ast::{Expr, LambdaParam, VarDeclarator};
pub use lexer::{tokenize, tokenize_lenient, LexError, Span, Token, TokenKind};
pub use parser::{parse_expression, parse_expression_str, qualified_name, ParseError};
pub use scan::{scan_assertions, ScannedAssertion, ASSERTION_NAMES};
pub use symbols::{
    base_type_name, build_symbol_table, build_symbol_table_for_file, class_under_test_from, SymbolTable, UNKNOWN_TYPE,
};
