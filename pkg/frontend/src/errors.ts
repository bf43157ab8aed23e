export class FigureError extends Error {}

export class SchemaMismatch extends FigureError {}

export class EmptyInput extends FigureError {}

export class VerdictMismatch extends FigureError {}
