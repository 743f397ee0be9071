//! Fixed-capacity ordered containers.
//!
//! [`ShiftArray`] is a fixed block of integer slots with an occupied prefix,
//! edited by shifting ranges up or down. [`BoundedQueue`] keeps its front at
//! position zero and shifts everything down on dequeue. [`BoundedStack`] grows
//! from position zero with the top at `count - 1`. [`LinkedList`] is a doubly
//! linked list with head/tail tracking, stored in an index arena.

use thiserror::Error;

/// Value written into vacated [`ShiftArray`] slots.
pub const VACANT: i64 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContainerError {
    #[error("index range {lo}..={hi} is outside capacity {capacity}")]
    Bounds { lo: usize, hi: usize, capacity: usize },
    #[error("index {index} is outside the occupied length {len}")]
    Index { index: usize, len: usize },
    #[error("array is full (capacity {capacity})")]
    Capacity { capacity: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("Could not add data. Queue is full.")]
    QueueFull,
    #[error("Could not remove data. Queue is empty.")]
    QueueEmpty,
    #[error("Could not add data. Stack is full.")]
    StackFull,
    #[error("Could not remove data. Stack is empty.")]
    StackEmpty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// Copy slot `i` to `i + 1`, walking from `hi` down to `lo`.
    Up,
    /// Copy slot `i` to `i - 1`, walking from `lo` up to `hi`.
    Down,
}

/// Fixed-capacity integer array with an occupied prefix of `len` slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftArray {
    slots: Vec<i64>,
    len: usize,
}

impl ShiftArray {
    pub fn new(capacity: usize) -> Self {
        Self {
            slots: vec![VACANT; capacity],
            len: 0,
        }
    }

    pub fn from_values(values: &[i64], capacity: usize) -> Result<Self, ContainerError> {
        if values.len() > capacity {
            return Err(ContainerError::Capacity { capacity });
        }
        let mut arr = Self::new(capacity);
        arr.slots[..values.len()].copy_from_slice(values);
        arr.len = values.len();
        Ok(arr)
    }

    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.slots.len()
    }

    /// The occupied prefix.
    pub fn as_slice(&self) -> &[i64] {
        &self.slots[..self.len]
    }

    /// Every slot, including vacant ones.
    pub fn slots(&self) -> &[i64] {
        &self.slots
    }

    pub fn get(&self, index: usize) -> Option<i64> {
        self.as_slice().get(index).copied()
    }

    /// Copies the inclusive range `lo..=hi` one slot in `direction`.
    ///
    /// The slot just past the range in the shift direction is overwritten and
    /// its old value is lost. An empty range (`lo > hi`) is a no-op. An up
    /// shift that writes past the occupied prefix extends it.
    pub fn shift(&mut self, lo: usize, hi: usize, direction: ShiftDirection) -> Result<(), ContainerError> {
        if lo > hi {
            return Ok(());
        }
        let capacity = self.capacity();
        match direction {
            ShiftDirection::Up => {
                if hi + 1 >= capacity {
                    return Err(ContainerError::Bounds { lo, hi, capacity });
                }
                for i in (lo..=hi).rev() {
                    self.slots[i + 1] = self.slots[i];
                }
                self.len = self.len.max(hi + 2);
            }
            ShiftDirection::Down => {
                if lo == 0 || hi >= capacity {
                    return Err(ContainerError::Bounds { lo, hi, capacity });
                }
                for i in lo..=hi {
                    self.slots[i - 1] = self.slots[i];
                }
            }
        }
        Ok(())
    }

    /// Opens a gap at `index` by shifting the tail up, then writes `value`.
    pub fn insert_at(&mut self, index: usize, value: i64) -> Result<(), ContainerError> {
        if self.is_full() {
            return Err(ContainerError::Capacity {
                capacity: self.capacity(),
            });
        }
        if index > self.len {
            return Err(ContainerError::Index { index, len: self.len });
        }
        let len = self.len;
        if len > 0 {
            self.shift(index, len - 1, ShiftDirection::Up)?;
        }
        self.slots[index] = value;
        self.len = len + 1;
        Ok(())
    }

    /// Removes the element at `index` by shifting the tail down over it.
    pub fn delete_at(&mut self, index: usize) -> Result<i64, ContainerError> {
        if index >= self.len {
            return Err(ContainerError::Index { index, len: self.len });
        }
        let removed = self.slots[index];
        self.shift(index + 1, self.len - 1, ShiftDirection::Down)?;
        self.len -= 1;
        self.slots[self.len] = VACANT;
        Ok(removed)
    }
}

/// `i mod n`, the wrap-around index into an `n`-slot ring.
pub fn circular_index(i: usize, n: usize) -> Result<usize, ContainerError> {
    if n == 0 {
        return Err(ContainerError::ZeroModulus);
    }
    Ok(i % n)
}

/// FIFO with a fixed maximum size. The front is always position zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedQueue<T> {
    data: Vec<T>,
    max: usize,
}

impl<T> BoundedQueue<T> {
    pub fn new(max: usize) -> Self {
        Self { data: Vec::new(), max }
    }

    /// A queue whose only limit is memory.
    pub fn unbounded() -> Self {
        Self::new(usize::MAX)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn is_full(&self) -> bool {
        self.data.len() == self.max
    }

    pub fn enqueue(&mut self, value: T) -> Result<(), ContainerError> {
        if self.is_full() {
            return Err(ContainerError::QueueFull);
        }
        self.data.push(value);
        Ok(())
    }

    /// Removes the front element; everything behind it moves down one slot.
    pub fn dequeue(&mut self) -> Result<T, ContainerError> {
        if self.data.is_empty() {
            return Err(ContainerError::QueueEmpty);
        }
        Ok(self.data.remove(0))
    }

    pub fn peek(&self) -> Result<&T, ContainerError> {
        self.data.first().ok_or(ContainerError::QueueEmpty)
    }

    /// Front-to-back view.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.data.iter()
    }
}

/// LIFO with a fixed maximum size. The top is position `len - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedStack<T> {
    data: Vec<T>,
    max: usize,
}

impl<T> BoundedStack<T> {
    pub fn new(max: usize) -> Self {
        Self { data: Vec::new(), max }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn max(&self) -> usize {
        self.max
    }

    pub fn is_full(&self) -> bool {
        self.data.len() == self.max
    }

    pub fn push(&mut self, value: T) -> Result<(), ContainerError> {
        if self.is_full() {
            return Err(ContainerError::StackFull);
        }
        self.data.push(value);
        Ok(())
    }

    /// Pushes `value`, discarding the bottom element first when full.
    /// Returns the discarded element, if any.
    pub fn push_evicting(&mut self, value: T) -> Option<T> {
        if self.max == 0 {
            return Some(value);
        }
        let evicted = if self.is_full() { Some(self.data.remove(0)) } else { None };
        self.data.push(value);
        evicted
    }

    pub fn pop(&mut self) -> Result<T, ContainerError> {
        self.data.pop().ok_or(ContainerError::StackEmpty)
    }

    pub fn peek(&self) -> Result<&T, ContainerError> {
        self.data.last().ok_or(ContainerError::StackEmpty)
    }

    /// Bottom-to-top view.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }
}

#[derive(Debug, Clone)]
struct Node<T> {
    payload: T,
    next: Option<usize>,
    prev: Option<usize>,
}

/// Doubly linked list with head/tail pointers and a node count.
///
/// Nodes live in an arena; freed slots are recycled. Positional insert uses
/// append semantics for any index at or past the end, and positional delete
/// reports absence instead of failing.
#[derive(Debug, Clone)]
pub struct LinkedList<T> {
    nodes: Vec<Option<Node<T>>>,
    free: Vec<usize>,
    head: Option<usize>,
    tail: Option<usize>,
    count: usize,
}

impl<T> Default for LinkedList<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> LinkedList<T> {
    pub fn new() -> Self {
        Self {
            nodes: Vec::new(),
            free: Vec::new(),
            head: None,
            tail: None,
            count: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    fn node(&self, idx: usize) -> &Node<T> {
        self.nodes[idx].as_ref().expect("dangling node link")
    }

    fn node_mut(&mut self, idx: usize) -> &mut Node<T> {
        self.nodes[idx].as_mut().expect("dangling node link")
    }

    fn alloc(&mut self, payload: T) -> usize {
        let node = Node {
            payload,
            next: None,
            prev: None,
        };
        match self.free.pop() {
            Some(idx) => {
                self.nodes[idx] = Some(node);
                idx
            }
            None => {
                self.nodes.push(Some(node));
                self.nodes.len() - 1
            }
        }
    }

    pub fn front(&self) -> Option<&T> {
        self.head.map(|h| &self.node(h).payload)
    }

    pub fn front_mut(&mut self) -> Option<&mut T> {
        let h = self.head?;
        Some(&mut self.node_mut(h).payload)
    }

    pub fn back(&self) -> Option<&T> {
        self.tail.map(|t| &self.node(t).payload)
    }

    pub fn push_back(&mut self, payload: T) {
        let idx = self.alloc(payload);
        match self.tail {
            None => {
                self.head = Some(idx);
                self.tail = Some(idx);
            }
            Some(t) => {
                self.node_mut(t).next = Some(idx);
                self.node_mut(idx).prev = Some(t);
                self.tail = Some(idx);
            }
        }
        self.count += 1;
    }

    /// Inserts before the node currently at position `i`; `i >= len` appends.
    pub fn insert(&mut self, i: usize, payload: T) {
        if i >= self.count {
            self.push_back(payload);
            return;
        }
        let at = self.index_of(i).expect("position checked against count");
        let idx = self.alloc(payload);
        let prev = self.node(at).prev;
        {
            let n = self.node_mut(idx);
            n.next = Some(at);
            n.prev = prev;
        }
        self.node_mut(at).prev = Some(idx);
        match prev {
            Some(p) => self.node_mut(p).next = Some(idx),
            None => self.head = Some(idx),
        }
        self.count += 1;
    }

    /// Unlinks and returns the payload at position `i`, or `None` if the list
    /// is shorter than `i + 1`.
    pub fn delete(&mut self, i: usize) -> Option<T> {
        let at = self.index_of(i)?;
        Some(self.unlink(at))
    }

    pub fn pop_front(&mut self) -> Option<T> {
        let h = self.head?;
        Some(self.unlink(h))
    }

    fn unlink(&mut self, at: usize) -> T {
        let node = self.nodes[at].take().expect("dangling node link");
        match node.prev {
            Some(p) => self.node_mut(p).next = node.next,
            None => self.head = node.next,
        }
        match node.next {
            Some(n) => self.node_mut(n).prev = node.prev,
            None => self.tail = node.prev,
        }
        self.free.push(at);
        self.count -= 1;
        node.payload
    }

    fn index_of(&self, i: usize) -> Option<usize> {
        let mut cur = self.head;
        for _ in 0..i {
            cur = self.node(cur?).next;
        }
        cur
    }

    pub fn get(&self, i: usize) -> Option<&T> {
        self.index_of(i).map(|idx| &self.node(idx).payload)
    }

    pub fn iter(&self) -> Iter<'_, T> {
        Iter {
            list: self,
            cur: self.head,
        }
    }

    /// Applies `f` to every payload from head to tail.
    pub fn for_each_mut(&mut self, mut f: impl FnMut(&mut T)) {
        let mut cur = self.head;
        while let Some(idx) = cur {
            let node = self.node_mut(idx);
            f(&mut node.payload);
            cur = node.next;
        }
    }

    /// Checks head/tail/count agreement and that predecessor links mirror
    /// successor links. Returns a description of the first violation.
    pub fn check_links(&self) -> Result<(), String> {
        if self.head.is_none() != self.tail.is_none() || self.head.is_none() != (self.count == 0) {
            return Err(format!(
                "head {:?}, tail {:?} and count {} disagree",
                self.head, self.tail, self.count
            ));
        }
        let mut seen = 0;
        let mut prev = None;
        let mut cur = self.head;
        while let Some(idx) = cur {
            let node = self.nodes.get(idx).and_then(Option::as_ref).ok_or_else(|| format!("link to freed node {idx}"))?;
            if node.prev != prev {
                return Err(format!("node {idx} has predecessor {:?}, expected {:?}", node.prev, prev));
            }
            seen += 1;
            if seen > self.count {
                return Err("successor chain is longer than count".to_string());
            }
            prev = Some(idx);
            cur = node.next;
        }
        if seen != self.count {
            return Err(format!("visited {seen} nodes, count is {}", self.count));
        }
        if prev != self.tail {
            return Err(format!("chain ends at {prev:?}, tail is {:?}", self.tail));
        }
        Ok(())
    }
}

impl<T: Clone> LinkedList<T> {
    /// Payloads in head-to-tail order.
    pub fn to_vec(&self) -> Vec<T> {
        self.iter().cloned().collect()
    }
}

/// Lists are equal when they hold equal payloads in the same order,
/// regardless of arena layout.
impl<T: PartialEq> PartialEq for LinkedList<T> {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().eq(other.iter())
    }
}

impl<T: Eq> Eq for LinkedList<T> {}

impl<T> FromIterator<T> for LinkedList<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut list = Self::new();
        for item in iter {
            list.push_back(item);
        }
        list
    }
}

pub struct Iter<'a, T> {
    list: &'a LinkedList<T>,
    cur: Option<usize>,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        let idx = self.cur?;
        let node = self.list.node(idx);
        self.cur = node.next;
        Some(&node.payload)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_up_overwrites_the_slot_past_the_range() {
        let mut arr = ShiftArray::from_values(&[1, 90, 45, 12], 6).unwrap();
        arr.shift(2, 3, ShiftDirection::Up).unwrap();
        assert_eq!(arr.slots(), &[1, 90, 45, 45, 12, 0]);
    }

    #[test]
    fn shift_down_loses_the_slot_before_the_range() {
        let mut arr = ShiftArray::from_values(&[1, 90, 45, 12], 4).unwrap();
        arr.shift(1, 3, ShiftDirection::Down).unwrap();
        assert_eq!(arr.slots(), &[90, 45, 12, 12]);
    }

    #[test]
    fn empty_shift_range_is_a_no_op() {
        let mut arr = ShiftArray::from_values(&[5, 6, 7], 4).unwrap();
        let before = arr.clone();
        arr.shift(2, 1, ShiftDirection::Up).unwrap();
        arr.shift(3, 0, ShiftDirection::Down).unwrap();
        assert_eq!(arr, before);
    }

    #[test]
    fn shift_rejects_out_of_range() {
        let mut arr = ShiftArray::from_values(&[1, 2, 3, 4], 4).unwrap();
        assert!(matches!(arr.shift(0, 3, ShiftDirection::Up), Err(ContainerError::Bounds { .. })));
        assert!(matches!(arr.shift(0, 2, ShiftDirection::Down), Err(ContainerError::Bounds { .. })));
        assert!(matches!(arr.shift(1, 4, ShiftDirection::Down), Err(ContainerError::Bounds { .. })));
    }

    #[test]
    fn insert_into_sorted_table() {
        let mut arr = ShiftArray::from_values(&[44, 36, 25, 12], 6).unwrap();
        arr.insert_at(1, 39).unwrap();
        assert_eq!(arr.as_slice(), &[44, 39, 36, 25, 12]);
        arr.delete_at(1).unwrap();
        assert_eq!(arr.as_slice(), &[44, 36, 25, 12]);
        assert_eq!(arr.slots(), &[44, 36, 25, 12, 0, 0]);
    }

    #[test]
    fn insert_edge_cases() {
        let mut arr = ShiftArray::new(3);
        arr.insert_at(0, 7).unwrap();
        assert_eq!(arr.as_slice(), &[7]);
        arr.insert_at(1, 8).unwrap();
        assert_eq!(arr.as_slice(), &[7, 8]);
        assert!(matches!(arr.insert_at(5, 1), Err(ContainerError::Index { .. })));
        arr.insert_at(2, 9).unwrap();
        assert_eq!(arr.insert_at(0, 1), Err(ContainerError::Capacity { capacity: 3 }));
    }

    #[test]
    fn delete_edge_cases() {
        let mut arr = ShiftArray::from_values(&[3], 2).unwrap();
        assert_eq!(arr.delete_at(0), Ok(3));
        assert!(arr.is_empty());
        assert!(matches!(arr.delete_at(0), Err(ContainerError::Index { .. })));
        let mut arr = ShiftArray::from_values(&[1, 2, 3], 3).unwrap();
        assert_eq!(arr.delete_at(2), Ok(3));
        assert_eq!(arr.slots(), &[1, 2, 0]);
    }

    #[test]
    fn circular_index_wraps() {
        assert_eq!(circular_index(5, 5), Ok(0));
        assert_eq!(circular_index(12, 5), Ok(2));
        assert_eq!(circular_index(3, 5), Ok(3));
        assert_eq!(circular_index(3, 0), Err(ContainerError::ZeroModulus));
    }

    #[test]
    fn queue_is_fifo_and_bounded() {
        let mut q = BoundedQueue::new(3);
        assert_eq!(q.dequeue(), Err(ContainerError::QueueEmpty));
        q.enqueue(1).unwrap();
        q.enqueue(2).unwrap();
        q.enqueue(3).unwrap();
        assert_eq!(q.enqueue(4), Err(ContainerError::QueueFull));
        assert_eq!(q.len(), 3);
        assert_eq!(q.peek(), Ok(&1));
        assert_eq!(q.peek(), Ok(&1));
        assert_eq!(q.dequeue(), Ok(1));
        assert_eq!(q.as_slice(), &[2, 3]);
    }

    #[test]
    fn stack_is_lifo_and_bounded() {
        let mut s = BoundedStack::new(3);
        assert_eq!(s.pop(), Err(ContainerError::StackEmpty));
        s.push(1).unwrap();
        assert_eq!(s.peek(), Ok(&1));
        s.push(2).unwrap();
        s.push(3).unwrap();
        assert_eq!(s.push(4), Err(ContainerError::StackFull));
        assert_eq!(s.peek(), Ok(&3));
        assert_eq!(s.pop(), Ok(3));
        assert_eq!(s.pop(), Ok(2));
    }

    #[test]
    fn push_evicting_drops_the_bottom() {
        let mut s = BoundedStack::new(2);
        assert_eq!(s.push_evicting(1), None);
        assert_eq!(s.push_evicting(2), None);
        assert_eq!(s.push_evicting(3), Some(1));
        assert_eq!(s.as_slice(), &[2, 3]);
    }

    #[test]
    fn list_insert_cases() {
        let mut l = LinkedList::new();
        l.insert(0, 'A');
        assert_eq!(l.front(), Some(&'A'));
        assert_eq!(l.back(), Some(&'A'));
        l.push_back('B');
        l.push_back('C');
        l.insert(1, 'X');
        assert_eq!(l.to_vec(), vec!['A', 'X', 'B', 'C']);
        l.insert(10, 'Z');
        assert_eq!(l.to_vec(), vec!['A', 'X', 'B', 'C', 'Z']);
        l.insert(0, 'H');
        assert_eq!(l.front(), Some(&'H'));
        l.check_links().unwrap();
    }

    #[test]
    fn list_delete_cases() {
        let mut l: LinkedList<char> = "ABC".chars().collect();
        assert_eq!(l.delete(0), Some('A'));
        assert_eq!(l.front(), Some(&'B'));
        let mut l: LinkedList<char> = "ABC".chars().collect();
        assert_eq!(l.delete(2), Some('C'));
        assert_eq!(l.back(), Some(&'B'));
        l.check_links().unwrap();
        let mut l: LinkedList<char> = "A".chars().collect();
        assert_eq!(l.delete(5), None);
        assert_eq!(l.to_vec(), vec!['A']);
        assert_eq!(l.delete(0), Some('A'));
        assert!(l.is_empty());
        assert_eq!(l.front(), None);
        assert_eq!(l.back(), None);
        l.check_links().unwrap();
    }

    #[test]
    fn freed_nodes_are_reused() {
        let mut l: LinkedList<u32> = (0..4).collect();
        l.delete(1);
        l.delete(1);
        l.push_back(9);
        l.push_back(10);
        assert_eq!(l.nodes.len(), 4);
        assert_eq!(l.to_vec(), vec![0, 3, 9, 10]);
        l.check_links().unwrap();
    }
}
