"""Program model, parser, closure and semantics engines."""
