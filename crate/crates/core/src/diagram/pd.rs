use super::{AnnularDiagram, ArcId, DiagramError, LinkDiagram, Raw};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), DiagramError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn ident(&mut self) -> Result<&'a str, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected identifier");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn int(&mut self) -> Result<i64, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    fn label(&mut self) -> Result<ArcId, DiagramError> {
        let at = self.pos;
        let v = self.int()?;
        if v <= 0 || v > u32::MAX as i64 {
            self.pos = at;
            return self.err("arc labels must be positive integers");
        }
        Ok(v as ArcId)
    }
}

/// Parse `PD[X[a,b,c,d],...]`; `Loop[a]` adds a crossingless component and `PD[]` is the unknot.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let head = lx.ident()?;
    if head != "PD" {
        return lx.err(format!("expected 'PD', found '{head}'"));
    }
    lx.expect(b'[')?;
    let mut raw = Raw { crossings: vec![], loops: vec![], positions: vec![] };
    if lx.peek() == Some(b']') {
        lx.pos += 1;
    } else {
        loop {
            let at = {
                lx.skip_ws();
                lx.pos
            };
            match lx.ident()? {
                "X" => {
                    lx.expect(b'[')?;
                    let mut x = [0; 4];
                    for (k, slot) in x.iter_mut().enumerate() {
                        if k > 0 {
                            lx.expect(b',')?;
                        }
                        *slot = lx.label()?;
                    }
                    lx.expect(b']')?;
                    raw.crossings.push(x);
                    raw.positions.push(at);
                }
                "Loop" => {
                    lx.expect(b'[')?;
                    raw.loops.push(lx.label()?);
                    lx.expect(b']')?;
                }
                other => {
                    lx.pos = at;
                    return lx.err(format!("unknown item '{other}'"));
                }
            }
            match lx.peek() {
                Some(b',') => lx.pos += 1,
                Some(b']') => {
                    lx.pos += 1;
                    break;
                }
                _ => return lx.err("expected ',' or ']'"),
            }
        }
    }
    if lx.peek().is_some() {
        return lx.err("trailing input");
    }
    if raw.crossings.is_empty() && raw.loops.is_empty() {
        raw.loops.push(1);
    }
    LinkDiagram::from_raw_pd(&raw)
}

/// Parse a PD code whose comments carry `# axis: F` and optionally `# outer: G` face indices.
pub fn parse_annular_pd(text: &str) -> Result<AnnularDiagram, DiagramError> {
    let d = parse_pd(text)?;
    let field = |key: &str| -> Result<Option<usize>, DiagramError> {
        for (n, line) in text.lines().enumerate() {
            if let Some(v) = line.trim().strip_prefix('#').and_then(|r| r.trim().strip_prefix(key)) {
                let pos = text.lines().take(n).map(|l| l.len() + 1).sum();
                let v = v.trim_start_matches(':').trim();
                return v.parse().map(Some).map_err(|_| DiagramError::Parse { pos, msg: format!("bad face index '{v}'") });
            }
        }
        Ok(None)
    };
    let axis = field("axis")?.ok_or(DiagramError::Parse { pos: 0, msg: "missing '# axis:' line".into() })?;
    match field("outer")? {
        Some(outer) => AnnularDiagram::mark_axis_with_outer(&d, axis, outer),
        None => AnnularDiagram::mark_axis(&d, axis),
    }
}

/// Parse `braid(n; w1,w2,...)` or the short form `n; w1 w2 ...`.
pub fn parse_braid(text: &str) -> Result<(usize, Vec<i32>), DiagramError> {
    let t = text.trim();
    let (offset, body) = match t.strip_prefix("braid") {
        Some(rest) => {
            let rest = rest.trim_start();
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.trim_end().strip_suffix(')'))
                .ok_or(DiagramError::Parse { pos: 5, msg: "expected braid(...)".into() })?;
            (text.find('(').unwrap() + 1, inner)
        }
        None => (text.len() - text.trim_start().len(), t),
    };
    let (n, w) = body
        .split_once(';')
        .ok_or(DiagramError::Parse { pos: offset, msg: "expected ';' after the strand count".into() })?;
    let strands: usize = n
        .trim()
        .parse()
        .map_err(|_| DiagramError::Parse { pos: offset, msg: format!("bad strand count '{}'", n.trim()) })?;
    let mut word = Vec::new();
    let base = offset + n.len() + 1;
    let mut at = 0;
    for tok in w.split(|c: char| c == ',' || c.is_whitespace()) {
        if !tok.is_empty() {
            let g: i32 = tok
                .parse()
                .map_err(|_| DiagramError::Parse { pos: base + at, msg: format!("bad generator '{tok}'") })?;
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(DiagramError::BraidIndex { index: g, strands });
            }
            word.push(g);
        }
        at += tok.len() + 1;
    }
    Ok((strands, word))
}
