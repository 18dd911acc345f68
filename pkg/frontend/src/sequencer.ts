// In-flight request supersession: responses are applied only if no newer
// request has been issued on the same stream since.

export class RequestGate {
  private issued = 0;
  private accepted = 0;

  /** Take a sequence number for a request about to be sent. */
  next(): number {
    this.issued += 1;
    return this.issued;
  }

  /** True (and records it) if a response with this number is still current:
   * it must be newer than anything accepted AND the newest issued. */
  accept(seq: number): boolean {
    if (seq <= this.accepted || seq < this.issued) return false;
    this.accepted = seq;
    return true;
  }

  get latest(): number {
    return this.issued;
  }
}
