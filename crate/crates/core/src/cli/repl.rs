//! Line-driven command processors. Each mode is a small state machine: it
//! shows a prompt, takes one line, and replies. A line that does not parse
//! yields a usage message and leaves the state exactly as it was.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use crate::containers::{BoundedQueue, BoundedStack, LinkedList};
use crate::hanoi::{Bar, HanoiGame};
use crate::ledger::{Ledger, LedgerError, Outcome, Transaction, TransactionKind};
use crate::lending::{Registry, ReportMode};
use crate::rng::Lcg32;
use crate::undo::{apply_edit, undo_last, TextBuffer, UndoStack};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Reply {
    pub output: String,
    pub quit: bool,
}

impl Reply {
    pub fn say(text: impl Into<String>) -> Self {
        Self {
            output: text.into(),
            quit: false,
        }
    }

    pub fn quit() -> Self {
        Self {
            output: String::new(),
            quit: true,
        }
    }

    fn usage(text: &str) -> Self {
        Self::say(format!("usage: {text}\n"))
    }
}

pub trait Mode {
    /// Text printed once before the first prompt.
    fn banner(&self) -> String {
        String::new()
    }

    fn prompt(&self) -> String;

    fn dispatch(&mut self, line: &str) -> Reply;
}

/// Drives a mode until it quits or input runs out.
pub fn run_repl<R: BufRead, W: Write>(mode: &mut dyn Mode, input: R, mut output: W) -> io::Result<()> {
    output.write_all(mode.banner().as_bytes())?;
    let mut lines = input.lines();
    let mut run = true;
    while run {
        output.write_all(mode.prompt().as_bytes())?;
        output.flush()?;
        let Some(line) = lines.next() else {
            writeln!(output)?;
            break;
        };
        let reply = mode.dispatch(&line?);
        output.write_all(reply.output.as_bytes())?;
        run = !reply.quit;
    }
    output.flush()
}

/// Feeds `lines` to `mode` and returns everything it printed.
pub fn transcript(mode: &mut dyn Mode, lines: &[&str]) -> String {
    let input = lines.iter().map(|l| format!("{l}\n")).collect::<String>();
    let mut out = Vec::new();
    run_repl(mode, input.as_bytes(), &mut out).expect("in-memory io");
    String::from_utf8(out).expect("modes print utf-8")
}

fn int(line: &str) -> Option<i64> {
    line.trim().parse().ok()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------- calc

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CalcStep {
    Operation,
    First(i64),
    Second(i64, i64),
}

/// Four-function integer calculator.
#[derive(Debug)]
pub struct Calc {
    step: CalcStep,
}

impl Default for Calc {
    fn default() -> Self {
        Self {
            step: CalcStep::Operation,
        }
    }
}

impl Calc {
    pub fn new() -> Self {
        Self::default()
    }

    fn compute(op: i64, a: i64, b: i64) -> String {
        match op {
            1 => a.wrapping_add(b).to_string(),
            2 => a.wrapping_sub(b).to_string(),
            3 => a.wrapping_mul(b).to_string(),
            _ if b == 0 => "divide by zero!".to_string(),
            _ => a.wrapping_div(b).to_string(),
        }
    }
}

impl Mode for Calc {
    fn prompt(&self) -> String {
        match self.step {
            CalcStep::Operation => {
                "Enter operation type. 1 for add, 2 for subtract, 3 for multiply, 4 for divide, 0 to exit: ".into()
            }
            CalcStep::First(_) => "Enter the first number: ".into(),
            CalcStep::Second(..) => "Enter the second number: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        match self.step {
            CalcStep::Operation => match n {
                0 => Reply::quit(),
                1..=4 => {
                    self.step = CalcStep::First(n);
                    Reply::default()
                }
                _ => Reply::say("Invalid operation!\n"),
            },
            CalcStep::First(op) => {
                self.step = CalcStep::Second(op, n);
                Reply::default()
            }
            CalcStep::Second(op, a) => {
                self.step = CalcStep::Operation;
                Reply::say(Self::compute(op, a, n) + "\n")
            }
        }
    }
}

// ---------------------------------------------------------------- guess

/// Number guessing against a secret drawn from the seeded generator.
#[derive(Debug)]
pub struct Guess {
    secret: i64,
}

impl Guess {
    pub fn new(rng: &mut Lcg32) -> Self {
        Self {
            secret: 1 + rng.below(10) as i64,
        }
    }

    pub fn secret(&self) -> i64 {
        self.secret
    }
}

impl Mode for Guess {
    fn prompt(&self) -> String {
        "enter a number: ".into()
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        match int(line) {
            None => Reply::usage("enter an integer between 1 and 10"),
            Some(n) if n < self.secret => Reply::say("go higher\n"),
            Some(n) if n > self.secret => Reply::say("go lower\n"),
            Some(_) => Reply {
                output: "you win!\n".into(),
                quit: true,
            },
        }
    }
}

// ---------------------------------------------------------------- bank

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BankStep {
    Name(usize),
    Menu,
    Account,
    Kind(i64),
    Amount(i64, i64),
}

/// Accounts with a queue of pending transactions.
#[derive(Debug)]
pub struct Bank {
    ledger: Ledger,
    accounts: usize,
    step: BankStep,
}

impl Bank {
    pub fn new(accounts: usize, strict: bool) -> Self {
        Self {
            ledger: if strict { Ledger::strict() } else { Ledger::new() },
            accounts,
            step: if accounts == 0 { BankStep::Menu } else { BankStep::Name(0) },
        }
    }

    pub fn ledger(&self) -> &Ledger {
        &self.ledger
    }
}

impl Mode for Bank {
    fn prompt(&self) -> String {
        match self.step {
            BankStep::Name(_) => "Enter account holder's name: ".into(),
            BankStep::Menu => "0-Exit, 1-Create Transaction, 2-Run Transaction, 3-List Transactions: ".into(),
            BankStep::Account => "Enter account number: ".into(),
            BankStep::Kind(_) => "Enter transaction type (1-Report, 2-Deposit, 3-Withdraw): ".into(),
            BankStep::Amount(..) => "Enter transaction amount: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        if let BankStep::Name(i) = self.step {
            let name = line.trim();
            if name.is_empty() {
                return Reply::usage("enter a name");
            }
            self.ledger.open_account(name);
            if i + 1 < self.accounts {
                self.step = BankStep::Name(i + 1);
                return Reply::default();
            }
            self.step = BankStep::Menu;
            let all: Vec<String> = self.ledger.accounts().iter().map(|a| a.to_string()).collect();
            return Reply::say(all.join("\n") + "\n");
        }
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        match self.step {
            BankStep::Menu => match n {
                0 => Reply::quit(),
                1 => {
                    self.step = BankStep::Account;
                    Reply::default()
                }
                2 => match self.ledger.run_next() {
                    Ok(outcome) => {
                        let mut out = String::new();
                        match &outcome {
                            Outcome::Reported(a) => {
                                let t = Transaction::new(a.number, TransactionKind::Report, 0);
                                writeln!(out, "{t}").unwrap();
                            }
                            Outcome::Applied(t, _) => writeln!(out, "{t}").unwrap(),
                            Outcome::Rejected(t, _) => writeln!(out, "{t}\nRejected: insufficient funds").unwrap(),
                        }
                        writeln!(out, "{}", outcome.account()).unwrap();
                        Reply::say(out)
                    }
                    Err(LedgerError::NothingPending) => Reply::say("No pending transactions\n"),
                    Err(e) => Reply::say(format!("{e}\n")),
                },
                3 => {
                    let all: Vec<String> = self.ledger.pending().iter().map(|t| t.to_string()).collect();
                    Reply::say(if all.is_empty() { String::new() } else { all.join("\n") + "\n" })
                }
                _ => Reply::say("invalid command\n"),
            },
            BankStep::Account => {
                self.step = BankStep::Kind(n);
                Reply::default()
            }
            BankStep::Kind(acc) => {
                self.step = BankStep::Amount(acc, n);
                Reply::default()
            }
            BankStep::Amount(acc, kind) => {
                self.step = BankStep::Menu;
                match self.ledger.submit_raw(acc, kind, n) {
                    Ok(()) => Reply::default(),
                    Err(LedgerError::InvalidTransaction(_)) => Reply::say("Invalid transaction\n"),
                    Err(e) => Reply::say(format!("{e}\n")),
                }
            }
            BankStep::Name(_) => unreachable!("handled above"),
        }
    }
}

// ---------------------------------------------------------------- queue / stack

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AddStep {
    Menu,
    Data,
}

const QUEUE_STACK_MENU: &str = "\n >> 0-exit 1-add 2-remove 3-show: ";

/// FIFO demo over integers.
#[derive(Debug)]
pub struct QueueDemo {
    queue: BoundedQueue<i64>,
    step: AddStep,
}

impl QueueDemo {
    pub fn new(capacity: usize) -> Self {
        Self {
            queue: BoundedQueue::new(capacity),
            step: AddStep::Menu,
        }
    }

    fn show(&self) -> String {
        join(self.queue.as_slice()) + "\n"
    }
}

impl Mode for QueueDemo {
    fn prompt(&self) -> String {
        match self.step {
            AddStep::Menu => QUEUE_STACK_MENU.into(),
            AddStep::Data => "enter new data: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        if self.step == AddStep::Data {
            self.step = AddStep::Menu;
            let mut out = String::new();
            if let Err(e) = self.queue.enqueue(n) {
                writeln!(out, "{e}").unwrap();
            }
            return Reply::say(out + &self.show());
        }
        match n {
            0 => Reply::quit(),
            1 => {
                self.step = AddStep::Data;
                Reply::default()
            }
            2 => {
                let mut out = String::new();
                if let Err(e) = self.queue.dequeue() {
                    writeln!(out, "{e}").unwrap();
                }
                Reply::say(out + &self.show())
            }
            3 => Reply::say(self.show()),
            _ => Reply::usage("0-exit 1-add 2-remove 3-show"),
        }
    }
}

/// LIFO demo over integers.
#[derive(Debug)]
pub struct StackDemo {
    stack: BoundedStack<i64>,
    step: AddStep,
}

impl StackDemo {
    pub fn new(capacity: usize) -> Self {
        Self {
            stack: BoundedStack::new(capacity),
            step: AddStep::Menu,
        }
    }

    fn show(&self) -> String {
        join(self.stack.as_slice()) + "\n"
    }
}

impl Mode for StackDemo {
    fn prompt(&self) -> String {
        match self.step {
            AddStep::Menu => QUEUE_STACK_MENU.into(),
            AddStep::Data => "enter new data: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        if self.step == AddStep::Data {
            self.step = AddStep::Menu;
            let mut out = String::new();
            if let Err(e) = self.stack.push(n) {
                writeln!(out, "{e}").unwrap();
            }
            return Reply::say(out + &self.show());
        }
        match n {
            0 => Reply::quit(),
            1 => {
                self.step = AddStep::Data;
                Reply::default()
            }
            2 => {
                let mut out = String::new();
                if let Err(e) = self.stack.pop() {
                    writeln!(out, "{e}").unwrap();
                }
                Reply::say(out + &self.show())
            }
            3 => Reply::say(self.show()),
            _ => Reply::usage("0-exit 1-add 2-remove 3-show"),
        }
    }
}

// ---------------------------------------------------------------- list

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ListStep {
    Menu,
    InsertAt,
    DeleteAt,
}

/// Player-id list with positional insert and delete.
#[derive(Debug)]
pub struct ListDemo {
    players: LinkedList<i64>,
    rng: Lcg32,
    step: ListStep,
}

impl ListDemo {
    pub fn new(rng: Lcg32) -> Self {
        Self {
            players: LinkedList::new(),
            rng,
            step: ListStep::Menu,
        }
    }

    fn new_id(&mut self) -> i64 {
        1000 + self.rng.below(100) as i64
    }
}

impl Mode for ListDemo {
    fn prompt(&self) -> String {
        match self.step {
            ListStep::Menu => "\n >> 0 - exit, 1 - add, 2 - insert, 3 - delete, 4 - report : ".into(),
            ListStep::InsertAt | ListStep::DeleteAt => "enter index: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        match self.step {
            ListStep::InsertAt | ListStep::DeleteAt if n < 0 => Reply::usage("index must not be negative"),
            ListStep::InsertAt => {
                self.step = ListStep::Menu;
                let id = self.new_id();
                self.players.insert(n as usize, id);
                Reply::default()
            }
            ListStep::DeleteAt => {
                self.step = ListStep::Menu;
                self.players.delete(n as usize);
                Reply::default()
            }
            ListStep::Menu => match n {
                0 => Reply::quit(),
                1 => {
                    let id = self.new_id();
                    self.players.push_back(id);
                    Reply::default()
                }
                2 => {
                    self.step = ListStep::InsertAt;
                    Reply::default()
                }
                3 => {
                    self.step = ListStep::DeleteAt;
                    Reply::default()
                }
                4 => Reply::say(self.players.iter().map(|id| format!("{id}\n")).collect::<String>()),
                _ => Reply::say("\n enter valid command 0-4\n"),
            },
        }
    }
}

// ---------------------------------------------------------------- hanoi

/// Two-phase pop-then-push play. The lifted disk is held here, never in the
/// game itself, so the game only ever sees whole legal moves.
#[derive(Debug)]
pub struct HanoiDemo {
    game: HanoiGame,
    holding: Option<Bar>,
    moves: u32,
}

impl HanoiDemo {
    pub fn new(disks: u32) -> Self {
        Self {
            game: HanoiGame::new(disks),
            holding: None,
            moves: 0,
        }
    }

    pub fn game(&self) -> &HanoiGame {
        &self.game
    }

    fn bars(&self) -> String {
        Bar::ALL
            .iter()
            .map(|&b| {
                let mut disks: Vec<u32> = self.game.bar(b).to_vec();
                if self.holding == Some(b) {
                    disks.pop();
                }
                format!("{b}: {}\n", join(disks))
            })
            .collect()
    }

    fn bar(n: i64) -> Option<Bar> {
        match n {
            1 => Some(Bar::A),
            2 => Some(Bar::B),
            3 => Some(Bar::C),
            _ => None,
        }
    }
}

impl Mode for HanoiDemo {
    fn banner(&self) -> String {
        self.bars()
    }

    fn prompt(&self) -> String {
        match self.holding {
            None => "\n >> 0-exit 1-pop from A, 2-pop from B, 3-pop from C: ".into(),
            Some(_) => "\n >> 0-exit 1-push to A, 2-push to B, 3-push to C: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter 0, 1, 2 or 3");
        };
        if n == 0 {
            return Reply::quit();
        }
        let Some(bar) = Self::bar(n) else {
            return Reply::usage("enter 0, 1, 2 or 3");
        };
        let Some(from) = self.holding else {
            if self.game.top(bar).is_none() {
                return Reply::say("Could not remove data. Stack is empty.\n");
            }
            self.holding = Some(bar);
            return Reply::say(self.bars());
        };
        let disk = self.game.top(from).expect("held bar has a top disk");
        if bar == from {
            // Putting a disk back is allowed and counts as a move.
            self.holding = None;
            self.moves += 1;
            return Reply::say(self.bars());
        }
        match self.game.move_disk(from, bar) {
            Ok(true) => {
                self.holding = None;
                self.moves += 1;
                let mut out = self.bars();
                if self.game.is_won() {
                    writeln!(out, "solved in {} moves", self.moves).unwrap();
                    return Reply { output: out, quit: true };
                }
                Reply::say(out)
            }
            Ok(false) => Reply::say(format!("disk {disk} cannot go on a smaller disk\n")),
            Err(e) => Reply::say(format!("{e}\n")),
        }
    }
}

// ---------------------------------------------------------------- lend

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LendStep {
    Menu,
    Patron(bool),
    Book(bool, i64),
}

/// Lending desk: report, borrow and return by id.
#[derive(Debug)]
pub struct LendDesk {
    registry: Registry,
    step: LendStep,
}

impl LendDesk {
    pub fn new(registry: Registry) -> Self {
        Self {
            registry,
            step: LendStep::Menu,
        }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }
}

impl Mode for LendDesk {
    fn banner(&self) -> String {
        self.registry.report(ReportMode::Staff)
    }

    fn prompt(&self) -> String {
        match self.step {
            LendStep::Menu => "1-Report, 2-Borrow, 3-Return, 0-Exit \n".into(),
            LendStep::Patron(_) => "Enter patron ID: ".into(),
            LendStep::Book(..) => "Enter book ID: ".into(),
        }
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let Some(n) = int(line) else {
            return Reply::usage("enter an integer");
        };
        match self.step {
            LendStep::Menu => match n {
                0 => Reply::quit(),
                1 => Reply::say(self.registry.report(ReportMode::Staff)),
                2 | 3 => {
                    self.step = LendStep::Patron(n == 2);
                    Reply::default()
                }
                _ => Reply::say("Invalid command\n"),
            },
            LendStep::Patron(borrowing) => {
                self.step = LendStep::Book(borrowing, n);
                Reply::default()
            }
            LendStep::Book(borrowing, patron) => {
                self.step = LendStep::Menu;
                let ok = if borrowing {
                    self.registry.borrow(patron, n)
                } else {
                    self.registry.return_item(patron, n)
                };
                let verdict = if ok { "Done\n" } else { "Sorry\n" };
                Reply::say(verdict.to_string() + &self.registry.report(ReportMode::Staff))
            }
        }
    }
}

// ---------------------------------------------------------------- undo

/// Tiny line editor: `type r c ch [sel_len]`, `undo`, `show`, `quit`.
#[derive(Debug)]
pub struct UndoEditor {
    buffer: TextBuffer,
    history: UndoStack,
}

impl UndoEditor {
    pub fn new(buffer: TextBuffer, capacity: usize) -> Self {
        Self {
            buffer,
            history: UndoStack::new(capacity),
        }
    }

    pub fn buffer(&self) -> &TextBuffer {
        &self.buffer
    }

    fn show(&self) -> String {
        self.buffer.lines().iter().enumerate().map(|(i, l)| format!("{i}: {l}\n")).collect()
    }
}

const UNDO_USAGE: &str = "type <row> <col> <char> [sel_len] | undo | show | quit";

impl Mode for UndoEditor {
    fn prompt(&self) -> String {
        "> ".into()
    }

    fn dispatch(&mut self, line: &str) -> Reply {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["quit"] | ["0"] => Reply::quit(),
            ["show"] => Reply::say(self.show()),
            ["undo"] => match undo_last(&mut self.buffer, &mut self.history) {
                Ok(_) => Reply::say(self.show()),
                Err(e) => Reply::say(format!("{e}\n")),
            },
            ["type", row, col, ch, rest @ ..] if rest.len() <= 1 => {
                let mut chars = ch.chars();
                let (Ok(row), Ok(col), Some(c), None) = (row.parse(), col.parse(), chars.next(), chars.next()) else {
                    return Reply::usage(UNDO_USAGE);
                };
                let sel = match rest.first().map(|s| s.parse::<usize>()) {
                    None => 0,
                    Some(Ok(s)) => s,
                    Some(Err(_)) => return Reply::usage(UNDO_USAGE),
                };
                match apply_edit(&mut self.buffer, &mut self.history, row, col, c, sel) {
                    Ok(()) => Reply::say(self.show()),
                    Err(e) => Reply::say(format!("{e}\n")),
                }
            }
            _ => Reply::usage(UNDO_USAGE),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calc_examples() {
        let out = transcript(&mut Calc::new(), &["1", "2", "3", "4", "7", "0", "9", "0"]);
        assert!(out.contains("Enter the second number: 5\n"));
        assert!(out.contains("divide by zero!\n"));
        assert!(out.contains("Invalid operation!\n"));
        assert_eq!(transcript(&mut Calc::new(), &["4", "7", "2", "0"]).matches("3\n").count(), 1);
    }

    #[test]
    fn parse_errors_keep_state() {
        let mut calc = Calc::new();
        calc.dispatch("1");
        let prompt = calc.prompt();
        let reply = calc.dispatch("seven");
        assert!(reply.output.starts_with("usage:"));
        assert_eq!(calc.prompt(), prompt);
    }

    #[test]
    fn guess_walks_to_the_secret() {
        let mut g = Guess::new(&mut Lcg32::new(1));
        let s = g.secret();
        assert!((1..=10).contains(&s));
        assert_eq!(g.dispatch(&(s - 1).to_string()).output, "go higher\n");
        assert_eq!(g.dispatch(&(s + 1).to_string()).output, "go lower\n");
        let r = g.dispatch(&s.to_string());
        assert_eq!(r.output, "you win!\n");
        assert!(r.quit);
    }

    #[test]
    fn bank_session() {
        let mut bank = Bank::new(2, false);
        let out = transcript(&mut bank, &["ann", "bo", "1", "1000", "2", "50", "1", "1000", "1", "0", "3", "2", "2", "2", "0"]);
        assert!(out.contains("Account #:  1001"));
        assert!(out.contains("Type:  Deposit"));
        assert!(out.contains("Balance:  50"));
        assert!(out.contains("No pending transactions"));
        assert_eq!(bank.ledger().report_account(1000).unwrap().balance, 50);
        let out = transcript(&mut Bank::new(1, false), &["z", "1", "1000", "5", "1", "0"]);
        assert!(out.contains("Invalid transaction\n"));
    }

    #[test]
    fn queue_and_stack_messages() {
        let out = transcript(&mut QueueDemo::new(1), &["2", "1", "7", "1", "8", "3", "0"]);
        assert!(out.contains("Could not remove data. Queue is empty."));
        assert!(out.contains("Could not add data. Queue is full."));
        let out = transcript(&mut StackDemo::new(1), &["2", "1", "7", "1", "8", "0"]);
        assert!(out.contains("Could not remove data. Stack is empty."));
        assert!(out.contains("Could not add data. Stack is full."));
    }

    #[test]
    fn list_report() {
        let out = transcript(&mut ListDemo::new(Lcg32::new(2)), &["1", "1", "2", "0", "3", "1", "4", "5", "0"]);
        assert!(out.contains("enter valid command 0-4"));
        let ids: Vec<&str> = out.split_whitespace().filter(|w| w.len() == 4 && w.starts_with('1')).collect();
        assert_eq!(ids.len(), 2);
    }

    #[test]
    fn hanoi_put_back_counts() {
        let mut demo = HanoiDemo::new(1);
        let out = transcript(&mut demo, &["1", "1", "1", "3"]);
        assert!(out.contains("solved in 2 moves"));
    }

    #[test]
    fn hanoi_scripted_win() {
        let mut demo = HanoiDemo::new(2);
        let out = transcript(&mut demo, &["1", "2", "1", "3", "1", "1", "2", "3"]);
        assert!(demo.game().is_won());
        assert!(out.contains("solved in 3 moves"));
        let out = transcript(&mut HanoiDemo::new(2), &["2", "1", "3", "1", "3", "0"]);
        assert!(out.contains("Stack is empty"));
        assert!(out.contains("disk 2 cannot go on a smaller disk"));
    }

    #[test]
    fn lend_desk_borrow() {
        let mut desk = LendDesk::new(Registry::with_defaults(&mut Lcg32::new(1)));
        let out = transcript(&mut desk, &["2", "1000", "1001", "2", "1000", "1002", "0"]);
        assert!(out.contains("Done\n"));
        assert!(out.contains("Sorry\n"));
        assert_eq!(desk.registry().patron(1000).unwrap().item, Some(1001));
    }

    #[test]
    fn undo_editor_session() {
        let mut ed = UndoEditor::new(TextBuffer::from_lines(&["cat"]), 8);
        let out = transcript(&mut ed, &["type 0 0 b 1", "type 0 3 s", "undo", "undo", "undo", "type 9 9 x", "bogus", "quit"]);
        assert!(out.contains("0: bat\n"));
        assert!(out.contains("0: bats\n"));
        assert!(out.contains("nothing to undo"));
        assert!(out.contains("usage:"));
        assert_eq!(ed.buffer().line(0).unwrap(), "cat");
    }
}
